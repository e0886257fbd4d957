"""Smoke tests for the python bindings; exits nonzero on any failure."""

import picardlab as pl


def check(ok, what):
    print(("ok" if ok else "FAIL") + " - " + what)
    return ok


def main():
    oks = []

    u, d, v = pl.smith_normal_form([[2, 4], [6, 8]])
    oks.append(check(d == [[2, 0], [0, 4]], "smith_normal_form diagonal of [[2,4],[6,8]]"))

    sol = pl.solve_linear([[2, 0], [0, 3]], [4, 9])
    oks.append(check(sol is not None and sol[0] == [2, 3], "solve_linear particular"))
    oks.append(check(pl.solve_linear([[2]], [3]) is None, "solve_linear infeasible"))

    h = pl.homology([0, 0], [0], [[4, 0]])
    oks.append(check(h == {"pi0": [4], "pi1": [0]}, "homology of [Z^2 -(4,0)-> Z]"))

    model = '{"A": [0, 0], "B": [0], "d": [[4, 0]], "skeletal": {"g": [[[1], [2], [1]]]}}'
    records = pl.check_model(model, cases=4, seed=11)
    oks.append(check(all(r["status"] == "pass" for r in records), "check_model all pass"))
    oks.append(check(records == pl.check_model(model, cases=4, seed=11),
                     "check_model deterministic"))

    zmodel = '{"A": [], "B": [0], "d": [[]]}'
    oks.append(check(pl.apply_matrix(zmodel, [[1, 1]], [[3], [5]]) == [[8]],
                     "apply_matrix (1,1) on (3,5)"))
    oks.append(check(pl.apply_matrix(zmodel, [[2, -1]], [[3], [5]]) == [[1]],
                     "apply_matrix (2,-1) on (3,5)"))

    big = 10**30
    oks.append(check(pl.apply_matrix(zmodel, [[1, 1]], [[big], [1]]) == [[big + 1]],
                     "arbitrary-precision round trip"))

    oks.append(check(pl.normalize_expression("(x2 + x1)") == "(x1 + x2)",
                     "normalize_expression sorts variables"))
    oks.append(check(pl.normalize_expression("(x1 + -(x1))") == "0",
                     "normalize_expression cancels inverses"))

    fz = pl.fuzz(cases=4, seed=3)
    oks.append(check(fz == pl.fuzz(cases=4, seed=3) and
                     all(r["status"] == "pass" for r in fz), "fuzz deterministic and green"))

    if all(oks):
        print("python smoke tests passed")
        return 0
    print("python smoke tests FAILED")
    return 1


if __name__ == "__main__":
    raise SystemExit(main())
