"""Acceptance criteria, all exact over GF(p).

Each test records one ``CRITERION ... PASS|FAIL`` line; the lines are echoed in
the pytest terminal summary (see conftest.py) and printed directly with ``-s``.
Running this file as a script prints them too.
"""

import random

import pytest

from hhsl2 import catalog as cat
from hhsl2 import verify
from hhsl2.cecomplex import (
    GradedCell,
    cell_weights,
    c_kernel_dim,
    connecting_cokernel_dim,
    differential,
    differential_matrix,
    euler_characteristics,
    ext_dim,
    is_cocycle,
)
from hhsl2.cli import main
from hhsl2.fieldpoly import ADJOINT, NATURAL, Poly, monomials_of_degree
from hhsl2.sl2act import LIE_BASIS, SymAdjoint, SymNatural, act, bracket, phi_map

PRIMES = (3, 5, 7)
RESULTS = []


def record(label, failures, checked):
    ok = not failures
    line = f"CRITERION {label}: {'PASS' if ok else 'FAIL'} ({checked} checks"
    line += ")" if ok else f", {len(failures)} failing; first: {failures[0]})"
    RESULTS.append(line)
    print(line)
    assert ok, line


def adjoint_table(p):
    return verify.adjoint_dim_table(p, 4 * p)


# 1 -------------------------------------------------------------------------

def test_criterion_1_natural_module_dimensions():
    failures, checked, adjudicated = [], 0, 0
    for p in PRIMES:
        recs = {(r.check, r.params["2n"]): r
                for r in verify.suite_dims(p, 3 * p) if "2n" in r.params}
        for m in range(0, 6 * p + 1, 2):
            mod = SymNatural(m)
            d1, d2, d3 = (ext_dim(i, mod, p) for i in (1, 2, 3))
            checked += 3
            if d1 != cat.ext1_natural(m, p):
                failures.append(f"p={p} 2n={m} Ext1 {d1} vs {cat.ext1_natural(m, p)}")
            if d3 != cat.ext3_natural(m, p):
                failures.append(f"p={p} 2n={m} Ext3 {d3} vs {cat.ext3_natural(m, p)}")
            st, pr = cat.ext2_natural(m, p, "statement"), cat.ext2_natural(m, p, "proof")
            if d2 not in (st, pr):
                failures.append(f"p={p} 2n={m} Ext2 {d2} vs statement {st} / proof {pr}")
            if st != pr:
                # the suite must side with the matching variant and flag the other
                adjudicated += 1
                for variant, value in (("statement", st), ("proof", pr)):
                    rec = recs[(f"ext2_natural.{variant}", m)]
                    want = "pass" if value == d2 else "paper-discrepancy"
                    if rec.status != want:
                        failures.append(f"p={p} 2n={m} ext2 {variant} reported {rec.status}, want {want}")
    record(f"1 natural Ext dims ({adjudicated} Ext2 points adjudicated)", failures, checked)


# 2 -------------------------------------------------------------------------

def test_criterion_2a_ext1_adjoint_matches_corollary():
    failures, checked = [], 0
    for p in PRIMES:
        for n, row in enumerate(adjoint_table(p)):
            checked += 1
            want = cat.ext1_adjoint_corollary(n, p)
            if row[1] != want:
                failures.append(f"p={p} n={n}: computed {row[1]}, closed form {want}")
    record("2a Ext1(S^n) vs three-branch closed form", failures, checked)


def test_criterion_2b_ext3_adjoint():
    failures, checked = [], 0
    for p in PRIMES:
        for n, row in enumerate(adjoint_table(p)):
            checked += 1
            want = cat.ext3_adjoint(n, p)
            if row[3] != want:
                failures.append(f"p={p} n={n}: computed {row[3]}, closed form {want}")
    record("2b Ext3(S^n) vs closed form", failures, checked)


def test_criterion_2c_ext0_adjoint():
    failures, checked = [], 0
    for p in PRIMES:
        for n, row in enumerate(adjoint_table(p)):
            checked += 1
            if row[0] != cat.f_n(n, p):
                failures.append(f"p={p} n={n}: computed {row[0]}, f_n {cat.f_n(n, p)}")
    record("2c Ext0(S^n) vs f_n", failures, checked)


def test_criterion_2d_ext2_recurrence():
    failures, checked = [], 0
    for p in PRIMES:
        table = adjoint_table(p)
        for n in (0, 1):
            checked += 1
            if table[n][2] != 0:
                failures.append(f"p={p} initial e_{n} = {table[n][2]}")
        for n in range(2, 4 * p + 1):
            checked += 1
            q = n // p
            step = cat.ext2_adjoint_step(n, p)
            diff = table[n][2] - table[n - 2][2]
            if step not in (3, 4 * q + 4, 2 * q - 1, 0) or diff != step:
                failures.append(f"p={p} n={n}: e_n - e_(n-2) = {diff}, recurrence {step}")
    record("2d Ext2(S^n) recurrence", failures, checked)


# 3 -------------------------------------------------------------------------

def test_criterion_3_cocycles():
    failures, checked = [], 0
    for p in PRIMES + (11,):
        for name in cat.COCYCLE_NAMES:
            checked += 1
            A = cat.build_cocycle(name, p)
            ok = is_cocycle(A) if A.n == 3 else differential(A).is_zero()
            if not ok:
                failures.append(f"{name} at p={p}")
    record("3 named cocycles", failures, checked)


# 4 -------------------------------------------------------------------------

def _relations(idents):
    failures, checked = [], 0
    for p in PRIMES:
        for ident in idents:
            rel = cat.RELATIONS_BY_ID[ident]
            rep = cat.verify_relation(rel, p)
            checked += 1
            if rep.status != "pass":
                failures.append(f"{ident} at p={p}: {rep.detail}")
            elif rel.expected == "coboundary" and differential(rep.witness) != rel.combination(p):
                failures.append(f"{ident} at p={p}: witness does not reproduce the combination")
    return failures, checked


def test_criterion_4a_exact_zero_relations():
    record("4a hh1rels items 5, 6 vanish as cochains", *_relations(["hh1rels.5", "hh1rels.6"]))


def test_criterion_4b_item1_as_printed():
    record("4b hh1rels item 1 is a coboundary", *_relations(["hh1rels.1"]))


def test_criterion_4c_other_coboundaries():
    ids = ["hh1rels.2", "hh1rels.3", "hh1rels.4", "hh1rels.7", "hh1rels.8", "hh2rel"]
    record("4c hh1rels items 2,3,4,7,8 and hh2rel are coboundaries", *_relations(ids))


def test_criterion_4d_top_class_relations():
    record("4d e^pI, f^pI, h^pI, c^((p-1)/2)I trivial",
           *_relations(["hh3.eI", "hh3.fI", "hh3.hI", "hh3.cI"]))


# 5 -------------------------------------------------------------------------

def test_criterion_5_connecting_maps():
    failures, checked = [], 0
    for p in PRIMES:
        for n in range(2, 3 * p + 1):
            for i in range(3):
                checked += 1
                want = 1 if (i == 2 and n == p - 1) else 0
                got = connecting_cokernel_dim(i, n, p)
                if got != want:
                    failures.append(f"p={p} n={n} coker(phi* on Ext{i}) = {got}, want {want}")
            checked += 1
            want = 1 if n == p - 1 else 0
            got = c_kernel_dim(3, n, p)
            if got != want:
                failures.append(f"p={p} n={n} ker(x c on Ext3) = {got}, want {want}")
    record("5 connecting homomorphisms", failures, checked)


# 6 -------------------------------------------------------------------------

def test_criterion_6_generation():
    failures, checked = [], 0
    for p in (3, 5):
        for i in (1, 2, 3):
            for r in cat.span_check(i, 4 * p, p):
                checked += 1
                if not r.ok:
                    failures.append(f"p={p} Ext{i} n={r.n}: span {r.span} of {r.dim}")
    record("6 Z-multiples of named generators span Ext^1..3", failures, checked)


# 7 -------------------------------------------------------------------------

def test_criterion_7_presentations():
    failures, checked, divergent = [], 0, 0
    for p in PRIMES:
        table = adjoint_table(p)
        for n, row in enumerate(table):
            for group in ("HH1", "HH2", "HH3"):
                checked += 1
                i = int(group[-1])
                got = cat.presentation_hilbert(group, n, p)
                if got != row[i]:
                    failures.append(f"p={p} {group} n={n}: presentation {got}, computed {row[i]}")
        for r in verify.suite_hilbert(p, 4 * p):
            if r.params["group"] == "HH1" and r.params["variant"] == "printed" and r.expected != r.computed:
                divergent += 1
                if r.status != "paper-discrepancy":
                    failures.append(f"p={p} printed hilb at n={r.params['n']} reported {r.status}")
    record(f"7 presentation Hilbert functions ({divergent} printed-hilb divergences reported)",
           failures, checked)


# 8 -------------------------------------------------------------------------

N_RANDOM = 500


def _rand(rng, varset, p, d, k=5):
    monos = monomials_of_degree(varset, d)
    return Poly(varset, p, {rng.choice(monos): rng.randrange(p) for _ in range(k)})


def _structure_modules(p):
    return [SymAdjoint(n) for n in range(2 * p + 2)] + [SymNatural(m) for m in range(0, 4 * p + 1, 2)]


def test_criterion_8_structure():
    failures, checked = [], 0
    rng = random.Random(8)
    for p in PRIMES:
        for mod in _structure_modules(p):
            for w in cell_weights(mod):
                for n in range(3):
                    d0 = differential_matrix(GradedCell(p, mod, n, w))
                    d1 = differential_matrix(GradedCell(p, mod, n + 1, w))
                    checked += 1
                    if d0.cols and d1.rows and not (d1 @ d0).is_zero():
                        failures.append(f"d o d != 0 in {mod} n={n} w={w} p={p}")
                chain, homology = euler_characteristics(mod, p, w)
                checked += 1
                if chain != homology:
                    failures.append(f"Euler characteristic {chain} vs {homology} in {mod} w={w} p={p}")
                if mod.kind == "sym_natural" and w % p:
                    for i in range(4):
                        checked += 1
                        if ext_dim(i, mod, p, weight=w):
                            failures.append(f"Ext{i} nonzero in {mod} w={w} p={p}")
        for _ in range(N_RANDOM):
            n = rng.randrange(7)
            a = _rand(rng, ADJOINT, p, n)
            g = rng.choice(LIE_BASIS)
            checked += 1
            if phi_map(n, act(g, a)) != act(g, phi_map(n, a)):
                failures.append(f"phi not equivariant on {a!r}, {g}, p={p}")
        for _ in range(N_RANDOM):
            a = _rand(rng, ADJOINT, p, rng.randrange(5))
            b = _rand(rng, ADJOINT, p, rng.randrange(5))
            g = rng.choice(LIE_BASIS)
            checked += 1
            if act(g, a * b) != act(g, a) * b + a * act(g, b):
                failures.append(f"Leibniz fails for {g} on {a!r}, {b!r}, p={p}")
        for _ in range(N_RANDOM):
            g, k = rng.choice(LIE_BASIS), rng.choice(LIE_BASIS)
            for x in (_rand(rng, ADJOINT, p, rng.randrange(6)), _rand(rng, NATURAL, p, rng.randrange(9))):
                checked += 1
                lhs = act(g, act(k, x)) - act(k, act(g, x))
                br = bracket(g, k)
                rhs = Poly.zero(x.varset, p) if br is None else act(br[1], x) * br[0]
                if lhs != rhs:
                    failures.append(f"[{g},{k}] incompatible on {x!r}, p={p}")
    record("8 structural properties", failures, checked)


# 9 -------------------------------------------------------------------------

def test_criterion_9_determinism(tmp_path, capsys):
    failures, checked = [], 0
    for p in (3, 5):
        for fmt in ("json", "csv", "text"):
            dirs = [tmp_path / f"{p}-{fmt}-{k}" for k in range(2)]
            for d in dirs:
                main(["report", "--p", str(p), "--format", fmt, "--out", str(d)])
            capsys.readouterr()
            for f in sorted(dirs[0].iterdir()):
                checked += 1
                if f.read_bytes() != (dirs[1] / f.name).read_bytes():
                    failures.append(f"{f.name} differs (p={p}, {fmt})")
    with capsys.disabled():
        record("9 report output byte-identical across runs", failures, checked)


if __name__ == "__main__":
    import sys
    sys.exit(pytest.main([__file__, "-q", "-s"]))
