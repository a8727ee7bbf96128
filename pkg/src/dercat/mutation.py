"""Tilting mutation: splits, minimal approximations, exchange triangles.

The replacement of each summand is computed honestly in the homotopy category:
the approximation is assembled from chain-map bases (multiplicities from the
quotient by composite morphisms), its cone is minimized, and the homology is
decomposed back into stalks.  Every mutation output is re-checked for
tilting-ness; failures are raised, never papered over.
"""

import random as _random
from dataclasses import dataclass

from . import complexes as cx, derived as dv, linalg, quiver as qv, reps as rp, sgd, slices as sls
from .linalg import Subspace
from .reps import InternalInconsistencyError


@dataclass(frozen=True)
class Split:
    t1: object
    t2: object


@dataclass
class ApproxTriangle:
    """One exchange triangle: replacement -> approx -> summand -> replacement[1]."""

    x: tuple                 # the (root, shift) summand being exchanged
    approx_copies: tuple     # (root, shift) summands of the approximation
    chain_map: object        # the approximation as a chain map (or None when zero)
    replacement: tuple       # resulting (root, shift)


def make_split(t, t2_picks):
    """Split T as (rest, chosen summands); Hom(t2, t1) must vanish."""
    tb = t.basic()
    picks = set((tuple(r), int(s)) for r, s in t2_picks)
    all_indecs = set(tb.indecs())
    if not picks or not picks <= all_indecs:
        raise ValueError("t2 must be a nonempty subset of the summands")
    t2 = tb.restrict(sorted(picks, key=lambda p: (p[1], p[0])))
    t1_set = sorted(all_indecs - picks, key=lambda p: (p[1], p[0]))
    t1 = tb.restrict(t1_set) if t1_set else None
    if t1 is not None and dv.hom_dim(t2, t1) != 0:
        raise ValueError("split is not admissible: Hom(t2, t1) != 0")
    if t1 is None:
        t1 = dv.DerivedObject(t.quiver, [])
    return Split(t1, t2)


def admissible_splits(t, canonical_only=False):
    """All splits with both parts nonzero and Hom(t2, t1) = 0, in a fixed order."""
    tb = t.basic()
    indecs = tb.indecs()
    n = len(indecs)
    if canonical_only:
        top = tb.max_shift
        picks = [p for p in indecs if p[1] == top]
        if len(picks) == n:
            return []
        return [make_split(tb, picks)]
    out = []
    for mask in range(1, (1 << n) - 1):
        picks = [indecs[i] for i in range(n) if mask & (1 << i)]
        rest = [indecs[i] for i in range(n) if not mask & (1 << i)]
        t2 = tb.restrict(picks)
        t1 = tb.restrict(rest)
        if dv.hom_dim(t2, t1) == 0:
            out.append(Split(t1, t2))
    return out


def _radical_complement(q, src, tgt, others):
    """Basis indices of Hom(src, tgt) spanning a complement of the maps
    factoring through the other summands, in the homotopy quotient."""
    sp = cx.homk_space_cached(q, src, tgt)
    if sp.dim == 0:
        return sp, []
    span = Subspace(sp.dim)
    for mid in others:
        through = cx.homk_space_cached(q, src, mid)
        onward = cx.homk_space_cached(q, mid, tgt)
        if through.dim == 0 or onward.dim == 0:
            continue
        for f in through.basis:
            for g in onward.basis:
                span.add(list(sp.coords(g.compose(f))))
    unit = [[1 if i == j else 0 for j in range(sp.dim)] for i in range(sp.dim)]
    chosen = span.extend_basis(unit)
    return sp, chosen


def _sum_map_to(q, pieces, maps, target):
    """Assemble chain maps piece_i -> target into one map from their direct sum."""
    total = cx.zero_complex(q)
    for p in pieces:
        total = total.direct_sum(p)
    comps = {}
    for d in total.degrees():
        if not target.term(d):
            continue
        mats = []
        tgt_rep = target.term_rep(d)
        for v in range(q.n):
            cols = []
            for p, f in zip(pieces, maps):
                pw = p.term_rep(d).dims[v]
                if pw == 0:
                    continue
                block = f.comp(d)._mat(v) if p.term(d) else None
                if block is None:
                    block = linalg.zeros(tgt_rep.dims[v], pw)
                cols.append(block)
            if tgt_rep.dims[v] and cols:
                mat = cols[0]
                for c in cols[1:]:
                    mat = linalg.hstack(mat, c)
                mats.append(mat)
            else:
                mats.append(linalg.zeros(tgt_rep.dims[v], total.term_rep(d).dims[v]))
        comps[d] = rp.RepMap(total.term_rep(d), tgt_rep, mats)
    return total, cx.ChainMap(total, target, comps)


def _map_into_sum(q, source, pieces, maps):
    """Assemble chain maps source -> piece_i into one map to their direct sum."""
    total = cx.zero_complex(q)
    for p in pieces:
        total = total.direct_sum(p)
    comps = {}
    for d in source.degrees():
        if not total.term(d):
            continue
        src_rep = source.term_rep(d)
        rows = []
        for p, f in zip(pieces, maps):
            if sum(p.term_rep(d).dims) == 0:
                continue
            rows.append((p, f.comp(d) if p.term(d) else None))
        mats = []
        for v in range(q.n):
            stacked = []
            for p, block in rows:
                ph = p.term_rep(d).dims[v]
                if ph == 0:
                    continue
                if block is None:
                    stacked.append(linalg.zeros(ph, src_rep.dims[v]))
                else:
                    stacked.append(block._mat(v))
            if stacked and src_rep.dims[v]:
                mat = stacked[0]
                for b in stacked[1:]:
                    mat = linalg.vstack(mat, b)
                mats.append(mat)
            else:
                mats.append(linalg.zeros(total.term_rep(d).dims[v], src_rep.dims[v]))
        comps[d] = rp.RepMap(src_rep, total.term_rep(d), mats)
    return total, cx.ChainMap(source, total, comps)


def _object_of_complex(q, c):
    """Stalk decomposition of a complex: minimize, take homology, decompose."""
    m = c.minimize()
    if m.is_zero():
        return dv.DerivedObject(q, [])
    from . import reps as rp
    summands = []
    for d, h in m.homology().items():
        for root, mult in rp.decompose(h).items():
            summands.append((root, -d, mult))
    return dv.DerivedObject(q, summands)


@dataclass
class ApproxData:
    copies: list       # one (root, shift) per summand copy of the approximation
    piece_maps: list   # matching chain maps copy -> x
    m_cx: object       # sum complex of the copies
    big: object        # assembled chain map, None when the approximation is zero
    x_cx: object


def right_approx_data(t1, x):
    """Minimal right approximation of the summand x from add(t1).

    Multiplicity of each t1 summand is the dimension of Hom into x modulo the
    maps factoring through the other summands; components are basis
    representatives completing that quotient.
    """
    q = t1.quiver
    xr, xs = x
    t1_indecs = list(t1.basic().indecs())
    x_cx = cx.stalk_complex_cached(q, xr, xs)
    pieces = []
    maps = []
    copies = []
    for src in t1_indecs:
        others = [o for o in t1_indecs if o != src]
        sp, chosen = _radical_complement(q, src, (xr, xs), others)
        basis = sp.basis if chosen else []
        for k in chosen:
            pieces.append(cx.stalk_complex_cached(q, *src))
            maps.append(basis[k])
            copies.append(src)
    if not pieces:
        return ApproxData([], [], cx.zero_complex(q), None, x_cx)
    m_cx, big = _sum_map_to(q, pieces, maps, x_cx)
    return ApproxData(copies, maps, m_cx, big, x_cx)


def minimal_right_approx(t1, x):
    """(approximation object, chain map onto the summand x); map is None if zero."""
    data = right_approx_data(t1, x)
    m = dv.DerivedObject(t1.quiver, [(r, s, 1) for r, s in data.copies]
                         ) if data.copies else dv.DerivedObject(t1.quiver, [])
    return m, data.big


def left_approx_data(t1, x):
    """Dual construction: minimal left approximation x -> add(t1)."""
    q = t1.quiver
    xr, xs = x
    t1_indecs = list(t1.basic().indecs())
    x_cx = cx.stalk_complex_cached(q, xr, xs)
    pieces = []
    maps = []
    copies = []
    for tgt in t1_indecs:
        others = [o for o in t1_indecs if o != tgt]
        sp = cx.homk_space_cached(q, (xr, xs), tgt)
        if sp.dim == 0:
            continue
        span = Subspace(sp.dim)
        for mid in others:
            through = cx.homk_space_cached(q, (xr, xs), mid)
            onward = cx.homk_space_cached(q, mid, tgt)
            if through.dim == 0 or onward.dim == 0:
                continue
            for g in through.basis:
                for f in onward.basis:
                    span.add(list(sp.coords(f.compose(g))))
        unit = [[1 if i == j else 0 for j in range(sp.dim)] for i in range(sp.dim)]
        chosen = span.extend_basis(unit)
        basis = sp.basis if chosen else []
        for k in chosen:
            pieces.append(cx.stalk_complex_cached(q, *tgt))
            maps.append(basis[k])
            copies.append(tgt)
    if not pieces:
        return ApproxData([], [], cx.zero_complex(q), None, x_cx)
    m_cx, big = _map_into_sum(q, x_cx, pieces, maps)
    return ApproxData(copies, maps, m_cx, big, x_cx)


def _replace_by_cone(q, data, direction):
    """Cone of the approximation, as a stalk object; asserted indecomposable."""
    if data.big is None:
        # zero approximation: the triangle degenerates to a pure (co)suspension
        obj = _object_of_complex(q, data.x_cx)
        return obj.shift(-1) if direction == "right" else obj.shift(1)
    c = cx.cone(data.big)
    obj = _object_of_complex(q, c)
    if direction == "right":
        obj = obj.shift(-1)
    total_mult = sum(s.mult for s in obj.summands)
    if total_mult != 1:
        raise InternalInconsistencyError(
            "exchange produced a decomposable replacement: %r" % (obj,))
    return obj


def mutate_with_data(t, split):
    """Mutation at the given split; returns (new object, exchange triangles)."""
    q = t.quiver
    tb = t.basic()
    if not dv.is_tilting(tb):
        raise ValueError("mutation starts from a tilting object")
    if set(split.t1.indecs()) | set(split.t2.indecs()) != set(tb.indecs()):
        raise ValueError("split does not partition the summands of T")
    if dv.hom_dim(split.t2, split.t1) != 0:
        raise ValueError("split is not admissible")
    triangles = []
    new_summands = list(split.t1.indecs())
    for x in split.t2.indecs():
        data = right_approx_data(split.t1, x)
        repl = _replace_by_cone(q, data, "right")
        (rr, rs), = repl.indecs()
        triangles.append(ApproxTriangle(x, tuple(data.copies), data.big, (rr, rs)))
        new_summands.append((rr, rs))
    out = dv.DerivedObject(q, [(r, s, 1) for r, s in new_summands])
    if not dv.is_tilting(out):
        raise InternalInconsistencyError("mutation produced a non-tilting object")
    return out, triangles


def mutate(t, split):
    return mutate_with_data(t, split)[0]


def co_mutate_with_data(t, split):
    """Dual mutation: left approximations, cone taken without the downward shift.

    Inverts mutate on the matching split (replacement summands against the same
    t1).  The dualized vanishing Hom(t1, t2) = 0 is how fresh dual mutations
    arise, but it can fail on a matching split, so only the partition is
    required here; the tilting check on the output stays as the hard gate.
    """
    q = t.quiver
    tb = t.basic()
    if not dv.is_tilting(tb):
        raise ValueError("mutation starts from a tilting object")
    if set(split.t1.indecs()) | set(split.t2.indecs()) != set(tb.indecs()):
        raise ValueError("split does not partition the summands of T")
    triangles = []
    new_summands = list(split.t1.indecs())
    for x in split.t2.indecs():
        data = left_approx_data(split.t1, x)
        repl = _replace_by_cone(q, data, "left")
        (rr, rs), = repl.indecs()
        triangles.append(ApproxTriangle(x, tuple(data.copies), data.big, (rr, rs)))
        new_summands.append((rr, rs))
    out = dv.DerivedObject(q, [(r, s, 1) for r, s in new_summands])
    if not dv.is_tilting(out):
        raise InternalInconsistencyError("co-mutation produced a non-tilting object")
    return out, triangles


def co_mutate(t, split):
    return co_mutate_with_data(t, split)[0]


@dataclass(frozen=True)
class TableCheck:
    cell: tuple       # (Hom(X,T1[l]) != 0, Hom(T2,X[1]) != 0)
    predicted: tuple  # (ell_minus, ell_plus, ell) against T
    actual: tuple


def verify_length_table(t, t_prime, split, x):
    """The two-predicate length table for a mutation, checked against the
    directly computed profile; mismatches raise."""
    prof_new = sgd.ell_profile(t_prime, x)
    xn = x.shift(-prof_new.ell_minus)
    ell = prof_new.ell
    p_row = dv.hom_dim(xn, split.t1.shift(ell)) != 0 if not split.t1.is_zero() else False
    p_col = dv.hom_dim(split.t2, xn.shift(1)) != 0
    if p_row and p_col:
        predicted = (-1, ell, ell + 1)
    elif p_row:
        predicted = (0, ell, ell)
    elif p_col:
        predicted = (-1, ell - 1, ell)
    else:
        predicted = (0, ell - 1, ell - 1)
    prof_old = sgd.ell_profile(t, xn)
    actual = (prof_old.ell_minus, prof_old.ell_plus, prof_old.ell)
    if predicted != actual:
        raise InternalInconsistencyError(
            "length table mismatch for %r: predicted %r got %r"
            % (xn.indecs(), predicted, actual))
    return TableCheck((p_row, p_col), predicted, actual)


def sgd_delta(t, t_prime):
    """sgldim(T) - sgldim(T'); the absolute value may never exceed 1."""
    a = sgd.sgldim(t).value
    b = sgd.sgldim(t_prime).value
    if abs(a - b) > 1:
        raise InternalInconsistencyError(
            "mutation moved the strong global dimension by %d" % (a - b))
    return a - b


def theoremB_sequence(t):
    """Mutation chain T^(0), ..., T^(l) = T with s.gl.dim End(T^(i)) = 2 + i.

    Built downward: split off the top slice-window level and mutate, asserting
    the dimension drops by exactly one each step.  Entries are (object, split),
    the split being the one applied to that object on the way down; the first
    entry carries no split.
    """
    d = sgd.sgldim(t).value
    if d < 2:
        raise ValueError("the sequence construction needs s.gl.dim >= 2")
    downward = []
    cur = t.basic()
    while True:
        dc = sgd.sgldim(cur).value
        if dc == 2:
            downward.append((cur, None))
            break
        sl = sls.find_slice(cur)
        hw = sls.shift_window(cur, sl)
        if hw.ell != dc - 2:
            raise InternalInconsistencyError(
                "canonical window %d does not match s.gl.dim %d" % (hw.ell, dc))
        top = [o for o, l in hw.levels if l == hw.ell]
        split = make_split(cur, top)
        nxt = mutate(cur, split)
        if sgd.sgldim(nxt).value != dc - 1:
            raise InternalInconsistencyError(
                "mutation step failed to decrease the dimension by one")
        downward.append((cur, split))
        cur = nxt
    return list(reversed(downward))


def random_tilting_walk(q, seed, steps, spread_cap=4):
    """Seeded mutation walk from the projective generator; deterministic.

    Steps whose result would exceed the shift-spread cap are rejected and the
    next candidate split is tried; a step with no acceptable split keeps T.
    """
    rng = _random.Random(seed)
    t = dv.projective_generator(q)
    log = []
    for step in range(steps):
        splits = admissible_splits(t)
        order = list(range(len(splits)))
        rng.shuffle(order)
        applied = False
        for idx in order:
            cand = mutate(t, splits[idx])
            if cand.spread <= spread_cap:
                log.append({"step": step, "t2": splits[idx].t2.indecs(),
                            "result": cand.indecs()})
                t = cand
                applied = True
                break
        if not applied:
            log.append({"step": step, "t2": None, "result": t.indecs()})
    return t, log
