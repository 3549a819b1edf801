"""Independent expectations for the case corpus, computed with sympy.

Usage: python3 oracle.py [--check]

For each case NAME.json this writes NAME.expected.json (or, with --check,
compares against the existing file and exits non-zero on a difference).
"""

import itertools
import json
import sys
from fractions import Fraction
from pathlib import Path

import sympy as sp

HERE = Path(__file__).resolve().parent
EXPONENT_CAP = 16
SWEEP = (2, 50)


def coeff(s, p=None):
    q = Fraction(s)
    if p is None:
        return sp.Rational(q.numerator, q.denominator)
    if q.denominator % p == 0:
        raise ValueError("bad denominator")
    return (q.numerator * pow(q.denominator, -1, p)) % p


def poly(spec, gens, p=None):
    expr = sp.Integer(0)
    for t in spec:
        mon = sp.Mul(*[g**e for g, e in zip(gens, t["exps"])])
        expr += coeff(t["coeff"], p) * mon
    return sp.expand(expr)


class Ambient:
    def __init__(self, gens, order, p=None):
        self.gens, self.order, self.p = gens, order, p

    def gb(self, polys):
        polys = [f for f in polys if f != 0]
        if not polys:
            return None
        opts = {"order": self.order}
        if self.p is not None:
            opts["modulus"] = self.p
        else:
            opts["domain"] = "QQ"
        return sp.groebner(polys, *self.gens, **opts)

    def member(self, f, polys):
        f = sp.expand(f)
        if self.p is not None:
            f = sp.Poly(f, *self.gens, modulus=self.p).as_expr()
        if f == 0:
            return True
        g = self.gb(polys)
        return g is not None and g.contains(f)

    def dimension(self, polys):
        g = self.gb(polys)
        nu = len(self.gens)
        if g is None:
            return nu
        leads = [sp.Poly(h, *self.gens).monoms(order=self.order)[0] for h in g.exprs]
        best = 0
        for k in range(nu + 1):
            for subset in itertools.combinations(range(nu), k):
                if all(any(e > 0 and i not in subset for i, e in enumerate(lm)) for lm in leads):
                    best = max(best, k)
        return best

    def leading_coeff(self, f):
        return sp.Poly(f, *self.gens).coeffs(order=self.order)[0]


def verify(case, p=None):
    ring = case["ring"]
    gens = sp.symbols(ring["vars"])
    amb = Ambient(gens, ring["order"], p)
    w = case["witness"]
    I = [poly(g, gens, p) for g in w["I"]]
    m = [poly(g, gens, p) for g in w["m"]]
    x = [poly(g, gens, p) for g in w["x"]]
    y = [poly(g, gens, p) for g in w["y"]]
    b = None if w["b"] is None else [coeff(c, p) for c in w["b"]]

    if p is not None:
        originals = [poly(g, gens) for g in w["I"] + w["m"] + w["x"]]
        for f, g in zip(originals, I + m + x):
            if f != 0 and (g == 0 or amb.leading_coeff(f) % p == 0):
                raise ValueError("degenerate generator")

    assert all(amb.member(g, m) for g in I), "I must lie in m"
    nu = len(gens)
    height = (nu - amb.dimension(m)) - (nu - amb.dimension(I))

    lifted = x + I
    if not all(amb.member(g, m) for g in lifted):
        cond1, exps = "not_contained_in_p", []
    else:
        cond1, exps = "equal", []
        for g in m:
            if g == 0:
                continue
            e = next((e for e in range(1, EXPONENT_CAP + 1) if amb.member(g**e, lifted)), None)
            if e is None:
                cond1, exps = "generator_power_not_found", []
                break
            exps.append(e)

    sys_gens = sp.symbols(
        [f"X{i}" for i in range(1, case["system"]["n"] + 1)]
        + [f"Y{j}" for j in range(1, case["system"]["r"] + 1)]
    )
    cond2 = []
    for eq in case["system"]["equations"]:
        f = poly(eq, sys_gens)
        g = f.subs(dict(zip(sys_gens, x + y)), simultaneous=True)
        cond2.append(amb.member(g, I))

    if b is None:
        cond3 = "not_applicable"
    else:
        jb = [t - c for t, c in zip(gens, b)]
        same = all(amb.member(g, jb) for g in m) and all(amb.member(g, m) for g in jb)
        values = [sp.expand(g.subs(dict(zip(gens, b)))) for g in I]
        vanish = all((v % p if p else v) == 0 for v in values)
        cond3 = "certified" if same and vanish else "failed"

    degrees = [sp.Poly(f, *gens).total_degree() for f in I + m + x + y if f != 0]
    d = max([nu] + degrees)
    passed = cond1 == "equal" and all(cond2) and height == w["claimed_n"] and cond3 != "failed"
    return {
        "passed": passed,
        "condition1": cond1,
        "exponents": exps,
        "condition2": cond2,
        "height": height,
        "condition3": cond3,
        "complexity_d": d,
    }


def bad_primes(case):
    gens = sp.symbols(case["ring"]["vars"])
    amb = Ambient(gens, case["ring"]["order"])
    w = case["witness"]
    found = {}
    for spec in w["I"] + w["m"] + w["x"] + w["y"]:
        for t in spec:
            for q in sp.factorint(Fraction(t["coeff"]).denominator):
                found.setdefault(q, set()).add("denominator")
    for c in w["b"] or []:
        for q in sp.factorint(Fraction(c).denominator):
            found.setdefault(q, set()).add("denominator")
    for spec in w["I"] + w["m"] + w["x"]:
        f = poly(spec, gens)
        if f != 0:
            for q in sp.factorint(abs(sp.Rational(amb.leading_coeff(f)).p)):
                found.setdefault(q, set()).add("leading-coeff")
    return [{"prime": q, "reasons": sorted(r)} for q, r in sorted(found.items())]


def expectations(case):
    char0 = verify(case)
    out = {"char0": char0, "bad_primes": bad_primes(case)}
    if char0["passed"]:
        bad = {e["prime"] for e in out["bad_primes"]}
        lo, hi = SWEEP
        good = [q for q in sp.primerange(lo, hi + 1) if q not in bad]
        results = {q: verify(case, q) for q in good}
        out["sweep"] = {
            "range": [lo, hi],
            "bad": sorted(q for q in bad if lo <= q <= hi),
            "passed": [q for q in good if results[q]["passed"]],
            "failed": [q for q in good if not results[q]["passed"]],
            "uniform_d": max((r["complexity_d"] for r in results.values()), default=None),
        }
    else:
        out["sweep"] = None
    return out


def main():
    check = "--check" in sys.argv
    status = 0
    for path in sorted(HERE.glob("*.json")):
        if path.name.endswith(".expected.json"):
            continue
        case = json.loads(path.read_text())
        text = json.dumps(expectations(case), indent=2) + "\n"
        target = path.with_suffix(".expected.json")
        if check:
            if not target.exists() or target.read_text() != text:
                print(f"MISMATCH {path.name}")
                status = 1
            else:
                print(f"ok {path.name}")
        else:
            target.write_text(text)
            print(f"wrote {target.name}")
    sys.exit(status)


if __name__ == "__main__":
    main()
