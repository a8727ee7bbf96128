"""Command-line surface.

Exit codes: 0 success, 1 property or verdict failure, 2 usage/parse errors.
Every command is deterministic given its input files and --seed.
"""

import argparse
import hashlib
import json
import sys

from . import complexes as cx, derived as dv, mutation as mu, quiver as qv, reps, sgd, slices as sls


def _read(path):
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_quiver(path):
    return qv.parse_quiver(_read(path))


def _load_object(q, path):
    return dv.parse_object(q, _read(path))


def _object_hash(x):
    return hashlib.sha256(dv.format_object(x).encode()).hexdigest()[:12]


def _emit_rows(rows, header, fmt):
    if fmt == "csv":
        print(",".join(header))
        for r in rows:
            print(",".join(str(r[h]) for h in header))
    elif fmt == "jsonl":
        for r in rows:
            print(json.dumps(r, sort_keys=True))
    else:
        for r in rows:
            print("  ".join("%s=%s" % (h, r[h]) for h in header))


def cmd_quiver_validate(args):
    q = _load_quiver(args.quiver)
    kinds = qv.classify_components(q)
    print("vertices %d, arrows %d" % (q.n, len(q.arrows)))
    print("components: %s" % ", ".join(str(k) for k in kinds))
    print("dynkin: %s" % ("yes" if qv.is_dynkin(q) else "no"))
    return 0


def cmd_ind_list(args):
    q = _load_quiver(args.quiver)
    for root in reps.knitting_order(q):
        if args.reps:
            print(reps.format_rep(reps.indec_of_root(q, root)), end="")
        else:
            print("dim=[%s]" % ",".join(str(d) for d in root))
    return 0


def cmd_hom(args):
    q = _load_quiver(args.quiver)
    if len(args.object) != 2:
        print("hom needs exactly two --object files", file=sys.stderr)
        return 2
    x = _load_object(q, args.object[0])
    y = _load_object(q, args.object[1])
    print("dim Hom = %d" % dv.hom_dim(x, y))
    return 0


def cmd_tilting_check(args):
    q = _load_quiver(args.quiver)
    t = _load_object(q, args.object[0])
    tb = t.basic()
    rigid = dv.is_rigid(tb)
    count_ok = tb.num_distinct() == q.n
    unimodular = dv.k0_unimodular(tb)
    tilting = dv.is_tilting(tb)
    print("rigid: %s" % ("yes" if rigid else "no"))
    if not rigid:
        i, src, tgt = dv.rigidity_failure(tb)
        print("  Hom(%r[%d], %r[%d]) != 0 at i=%d" % (src[0], src[1], tgt[0], tgt[1] + i, i))
    print("summands: %d of %d" % (tb.num_distinct(), q.n))
    print("unimodular classes: %s" % ("yes" if unimodular else "no"))
    if args.slow and tilting:
        gen = dv.generates_thick(tb)
        print("thick closure generates: %s" % ("yes" if gen else "no"))
        if not gen:
            return 1
    print("tilting: %s" % ("yes" if tilting else "no"))
    return 0 if tilting else 1


def cmd_sgd(args):
    q = _load_quiver(args.quiver)
    t = _load_object(q, args.object[0])
    rep = sgd.sgldim(t, window_pad=args.window_pad)
    if args.csv:
        print("quiver,object-hash,value,witness")
        print("%s,%s,%d,%s" % (str(qv.classify(q)), _object_hash(t), rep.value,
                               dv.format_object(rep.witness).strip().replace("\n", ";")))
    else:
        print("s.gl.dim = %d" % rep.value)
        print("witness:")
        sys.stdout.write(dv.format_object(rep.witness))
    return 0


def _parse_t2(t, spec_str):
    indecs = t.basic().indecs()
    try:
        picks = [indecs[int(i)] for i in spec_str.split(",")]
    except (ValueError, IndexError):
        raise ValueError("bad --t2 %r; expected comma-separated summand indices 0..%d"
                         % (spec_str, len(indecs) - 1))
    return mu.make_split(t, picks)


def cmd_mutate(args, dual=False):
    q = _load_quiver(args.quiver)
    t = _load_object(q, args.object[0])
    split = _parse_t2(t, args.t2)
    out = mu.co_mutate(t, split) if dual else mu.mutate(t, split)
    text = dv.format_object(out)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_slice(args):
    q = _load_quiver(args.quiver)
    t = _load_object(q, args.object[0])
    if args.all_slices:
        z = sls.zq_of(q)
        verts = [z.vertex_of(o) for o in t.basic().indecs()]
        m_lo = min(m for m, _ in verts) - args.window_pad
        m_hi = max(m for m, _ in verts) + args.window_pad
        found, truncated = sls.enumerate_slices(q, m_lo, m_hi)
        for s in found:
            print("slice: " + " ".join("[%s]@%d" % (",".join(map(str, r)), sh)
                                       for r, sh in s.objects))
        if truncated:
            print("# truncated at cap", file=sys.stderr)
        return 0
    s = sls.find_slice(t)
    src_objs = set(sls.zq_of(q).object_of(*v) for v in s.sources)
    for r, sh in s.objects:
        mark = "  # source" if (r, sh) in src_objs else ""
        print("summand dim=[%s] shift=%d mult=1%s" % (",".join(map(str, r)), sh, mark))
    return 0


def cmd_theoremb(args):
    q = _load_quiver(args.quiver)
    t = _load_object(q, args.object[0])
    seq = mu.theoremB_sequence(t)
    rows = []
    for i, (obj, split) in enumerate(seq):
        if args.out_prefix:
            with open("%s%d.obj" % (args.out_prefix, i), "w", encoding="utf-8") as fh:
                fh.write(dv.format_object(obj))
        rows.append({"index": i, "sgldim": sgd.sgldim(obj).value,
                     "object": _object_hash(obj)})
    _emit_rows(rows, ["index", "sgldim", "object"], "csv" if args.csv else "text")
    return 0


def cmd_random_tilting(args):
    q = _load_quiver(args.quiver)
    t, log = mu.random_tilting_walk(q, args.seed, args.steps)
    sys.stdout.write(dv.format_object(t))
    for entry in log:
        print("# step %d t2=%s" % (entry["step"], entry["t2"]), file=sys.stderr)
    return 0


def _corpus(q, seed, samples):
    out = []
    for k in range(samples):
        t, _ = mu.random_tilting_walk(q, seed + k, 4 + (seed + k) % 7)
        out.append(t)
    return out


def cmd_verify(args):
    q = _load_quiver(args.quiver)
    fmt = "csv" if args.csv else ("jsonl" if args.jsonl else "text")
    rows = []
    failures = 0
    which = args.which

    def fail_row(row, obj=None):
        nonlocal failures
        failures += 1
        rows.append(row)
        if obj is not None:
            print("# replay object:", file=sys.stderr)
            sys.stderr.write(dv.format_object(obj))

    if which in ("homagree", "serre"):
        roots = qv.positive_roots(q)
        width = 4
        pairs = [(r, s) for r in roots for s in range(width)]

        def tag(r, s):
            return "%s@%d" % (".".join(str(d) for d in r), s)

        for r1, s1 in pairs:
            for r2, s2 in pairs:
                if which == "homagree":
                    a = dv.pair_hom_dim(q, r1, s1, r2, s2)
                    b = cx.homk_pair_dim(q, r1, r2, s2 - s1)
                    ok = a == b
                    detail = "%d/%d" % (a, b)
                else:
                    ok = dv.serre_dual_check(dv.stalk(q, r1, s1), dv.stalk(q, r2, s2))
                    detail = ""
                row = {"check": which, "x": tag(r1, s1), "y": tag(r2, s2),
                       "status": "pass" if ok else "FAIL", "detail": detail}
                if ok:
                    rows.append(row)
                else:
                    fail_row(row)
        _emit_rows(rows, ["check", "x", "y", "status", "detail"], fmt)
    elif which in ("delta", "table"):
        count = args.samples
        done = 0
        k = 0
        while done < count:
            t, _ = mu.random_tilting_walk(q, args.seed + k, 3 + k % 6)
            k += 1
            splits = mu.admissible_splits(t)
            if not splits:
                continue
            split = splits[(args.seed + k) % len(splits)]
            tp = mu.mutate(t, split)
            try:
                if which == "delta":
                    d = mu.sgd_delta(t, tp)
                    detail = "delta=%d" % d
                else:
                    roots = qv.positive_roots(q)
                    cells = 0
                    for kk in range(tp.min_shift - 1, tp.max_shift + 2):
                        for root in roots:
                            mu.verify_length_table(t, tp, split, dv.stalk(q, root, kk))
                            cells += 1
                    detail = "cells=%d" % cells
                rows.append({"check": which, "instance": _object_hash(t),
                             "status": "pass", "detail": detail})
            except reps.InternalInconsistencyError as e:
                fail_row({"check": which, "instance": _object_hash(t),
                          "status": "FAIL", "detail": str(e)}, t)
            done += 1
        _emit_rows(rows, ["check", "instance", "status", "detail"], fmt)
    elif which in ("a", "b"):
        for t in _corpus(q, args.seed, args.samples):
            value = sgd.sgldim(t).value
            if which == "a":
                if value < 2:
                    rows.append({"check": "a", "instance": _object_hash(t),
                                 "status": "skip", "detail": "hereditary"})
                    continue
                try:
                    rep = sls.theoremA_verify(t, window_pad=args.window_pad)
                    rows.append({"check": "a", "instance": _object_hash(t), "status": "pass",
                                 "detail": "ell=%d sgd=%d slices=%d" % (rep.ell, rep.sgd,
                                                                        rep.slices_checked)})
                except reps.InternalInconsistencyError as e:
                    fail_row({"check": "a", "instance": _object_hash(t),
                              "status": "FAIL", "detail": str(e)}, t)
            else:
                if value < 2:
                    rows.append({"check": "b", "instance": _object_hash(t),
                                 "status": "skip", "detail": "hereditary"})
                    continue
                try:
                    seq = mu.theoremB_sequence(t)
                    ok = len(seq) - 1 == value - 2 and all(
                        sgd.sgldim(obj).value == 2 + i for i, (obj, _) in enumerate(seq))
                    row = {"check": "b", "instance": _object_hash(t),
                           "status": "pass" if ok else "FAIL",
                           "detail": "length=%d" % (len(seq) - 1)}
                    if ok:
                        rows.append(row)
                    else:
                        fail_row(row, t)
                except reps.InternalInconsistencyError as e:
                    fail_row({"check": "b", "instance": _object_hash(t),
                              "status": "FAIL", "detail": str(e)}, t)
        _emit_rows(rows, ["check", "instance", "status", "detail"], fmt)
    return 1 if failures else 0


def build_parser():
    p = argparse.ArgumentParser(prog="dercat",
                                description="Exact derived-category computations for Dynkin quivers")
    sub = p.add_subparsers(dest="cmd", required=True)

    def add_common(sp, objects=0):
        sp.add_argument("--quiver", required=True, help="quiver file")
        if objects:
            sp.add_argument("--object", action="append", required=True,
                            help="object file (repeatable)")

    spq = sub.add_parser("quiver", help="quiver utilities")
    sq = spq.add_subparsers(dest="sub", required=True)
    v = sq.add_parser("validate")
    v.add_argument("--quiver", required=True)
    v.set_defaults(fn=cmd_quiver_validate)

    spi = sub.add_parser("ind", help="indecomposables")
    si = spi.add_subparsers(dest="sub", required=True)
    il = si.add_parser("list")
    il.add_argument("--quiver", required=True)
    il.add_argument("--reps", action="store_true")
    il.set_defaults(fn=cmd_ind_list)

    h = sub.add_parser("hom")
    add_common(h, objects=1)
    h.set_defaults(fn=cmd_hom)

    spt = sub.add_parser("tilting", help="tilting checks")
    st = spt.add_subparsers(dest="sub", required=True)
    tc = st.add_parser("check")
    add_common(tc, objects=1)
    tc.add_argument("--slow", action="store_true", help="also run the thick-closure oracle")
    tc.set_defaults(fn=cmd_tilting_check)

    s = sub.add_parser("sgd")
    add_common(s, objects=1)
    s.add_argument("--csv", action="store_true")
    s.add_argument("--window-pad", type=int, default=2)
    s.set_defaults(fn=cmd_sgd)

    for name, dual in (("mutate", False), ("comutate", True)):
        m = sub.add_parser(name)
        add_common(m, objects=1)
        m.add_argument("--t2", required=True, help="comma-separated summand indices")
        m.add_argument("--out", help="output object file")
        m.set_defaults(fn=lambda a, dual=dual: cmd_mutate(a, dual))

    sl = sub.add_parser("slice")
    add_common(sl, objects=1)
    sl.add_argument("--all-slices", action="store_true")
    sl.add_argument("--window-pad", type=int, default=2)
    sl.set_defaults(fn=cmd_slice)

    tb = sub.add_parser("theoremb")
    add_common(tb, objects=1)
    tb.add_argument("--out-prefix", help="write numbered object files with this prefix")
    tb.add_argument("--csv", action="store_true")
    tb.set_defaults(fn=cmd_theoremb)

    rt = sub.add_parser("random-tilting")
    rt.add_argument("--quiver", required=True)
    rt.add_argument("--seed", type=int, required=True)
    rt.add_argument("--steps", type=int, default=0)
    rt.set_defaults(fn=cmd_random_tilting)

    ve = sub.add_parser("verify")
    ve.add_argument("which", choices=["a", "b", "table", "delta", "serre", "homagree"])
    ve.add_argument("--quiver", required=True)
    ve.add_argument("--seed", type=int, default=0)
    ve.add_argument("--samples", type=int, default=20)
    ve.add_argument("--window-pad", type=int, default=2)
    ve.add_argument("--csv", action="store_true")
    ve.add_argument("--jsonl", action="store_true")
    ve.set_defaults(fn=cmd_verify)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    try:
        return args.fn(args)
    except (OSError, ValueError, qv.QuiverError) as e:
        print("error: %s" % e, file=sys.stderr)
        return 2
    except reps.InternalInconsistencyError as e:
        print("invariant breach: %s" % e, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
