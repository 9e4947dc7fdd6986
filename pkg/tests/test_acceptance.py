"""Acceptance criteria 1-11.

Each test records one PASS/FAIL line; the lines are printed at the end of
the pytest run (see conftest.py) and also when this file is run directly:

    python3 tests/test_acceptance.py

Set LMOV_EXTENDED=1 to add the degree-4 existence/integrality run on the
unknot and the Hopf link.
"""

import os
import sys
import time
from functools import lru_cache

import pytest

from lmov.braid_link import CATALOG_NAMES, catalog
from lmov.combinatorics import colors_up_to, partitions_of
from lmov.cutjoin import check_schur_eigen, verify_framed_cutjoin
from lmov.lmov_pipeline import (build_Z, check_degree_bound, check_lickorish_millett,
                                check_pole_structure, check_symmetry_lemma, free_energy,
                                lmov_table)
from lmov.numtheory import run_all
from lmov.qt_ring import RationalQT, bracket, bracket_t
from lmov.quantum_engine import (colored_invariant, invariant_at_N, zhat_character_sum,
                                 zhat_powersum)
from lmov.skein import fundamental_invariant
from lmov.symfun import quantum_dimension, quantum_dimension_at

RESULTS = {}

CRITERION4_LINKS = ("unknot", "hopf", "trefoil", "torus(2,5)")
EXTENDED = os.environ.get("LMOV_EXTENDED") == "1"


def record(n, ok, what, seconds, limit=None):
    within = limit is None or seconds < limit
    status = "PASS" if ok and within else "FAIL"
    note = "" if within else " (over the %ss budget)" % limit
    RESULTS[n] = "criterion %2d: %s  %s  [%.2fs]%s" % (n, status, what, seconds, note)
    assert ok, what
    assert within, "criterion %d took %.1fs, budget %ss" % (n, seconds, limit)


@lru_cache(maxsize=None)
def free_energy_of(name, cap):
    return free_energy(build_Z(catalog(name), cap))


def test_criterion_01_unknot_anchor():
    t0 = time.perf_counter()
    F = free_energy(build_Z(catalog("unknot"), 3))
    W1 = F.Z[((1,),)]
    expected = RationalQT(bracket_t(1) * bracket(1)).div_bracket(1, 2)   # [t]/[1]
    table = lmov_table(F)
    ok = W1 == expected and table.ok
    ok = ok and table.N[((1,),)] == {(0, -1): 1, (0, 1): -1}
    ok = ok and all(not table.N[B] for B in table.N if B != ((1,),))
    record(1, ok, "unknot W_(1) = quantum dimension, N_(1);0,+-1/2 = +-1, rest zero",
           time.perf_counter() - t0, limit=1)


def test_criterion_02_quantum_dimension():
    t0 = time.perf_counter()
    unknot = catalog("unknot")
    ok = True
    for n in range(1, 4):
        for A in partitions_of(n):
            generic = colored_invariant(unknot, (A,))
            ok = ok and generic == quantum_dimension(A)
            for N in (2, 3, 4, 5):
                explicit = invariant_at_N(unknot, (A,), N)
                ok = ok and explicit == quantum_dimension_at(A, N)
                ok = ok and generic.specialize_t(N) == explicit
    record(2, ok, "trace of minimal projections = quantum dimension, |A| <= 3, N = 2..5",
           time.perf_counter() - t0, limit=60)


def test_criterion_03_homfly_oracle():
    t0 = time.perf_counter()
    ok = True
    for name in ("trefoil", "hopf", "torus(2,5)"):
        L = catalog(name)
        ok = ok and colored_invariant(L, tuple((1,) for _ in range(L.num_components))) \
            == fundamental_invariant(L)
    record(3, ok, "fundamental colour = skein oracle on trefoil, Hopf, torus(2,5)",
           time.perf_counter() - t0, limit=60)


def test_criterion_04_existence_integrality():
    t0 = time.perf_counter()
    failures = []
    runs = [(name, 3) for name in CRITERION4_LINKS]
    if EXTENDED:
        runs += [("unknot", 4), ("hopf", 4)]
    for name, cap in runs:
        table = lmov_table(free_energy_of(name, cap))
        failures += [(name, B, kind) for B, kind, _ in table.failures]
    what = "[1]^2 P_B in Z[v, t^(+-1/2)] for ||B|| <= 3 on %s" % ", ".join(CRITERION4_LINKS)
    if EXTENDED:
        what += " (+ degree 4 on unknot, Hopf)"
    record(4, not failures, what, time.perf_counter() - t0, limit=1800)


def test_criterion_05_symmetry_lemma():
    t0 = time.perf_counter()
    ok = all(check_symmetry_lemma(free_energy_of(name, 3).Z)["ok"] for name in CRITERION4_LINKS)
    record(5, ok, "W_(A^t)(q, t) = (-1)^||A|| W_A(1/q, t) on every criterion-4 invariant",
           time.perf_counter() - t0)


# The figure-eight is a 3-braid; degree 4 would need 12 cabled strands, which
# is out of desk reach for the Hecke engine, so it is checked to degree 3.
DEGREE_BOUND_CAPS = {name: 4 for name in CATALOG_NAMES}
DEGREE_BOUND_CAPS["figure8"] = 3


def test_criterion_06_degree_bound():
    t0 = time.perf_counter()
    ok = all(check_degree_bound(free_energy_of(name, cap))["ok"]
             for name, cap in DEGREE_BOUND_CAPS.items())
    record(6, ok, "pole order of F_mu at q = 1 >= ell(mu) - 2, ||mu|| <= 4 on catalogue links "
           "(figure8 to ||mu|| <= 3)", time.perf_counter() - t0)


def test_criterion_07_pole_structure():
    t0 = time.perf_counter()
    ok = True
    for name in ("unknot", "trefoil"):
        F = free_energy_of(name, 3)
        for d in ((1,), (2,)):
            ok = ok and check_pole_structure(F, d)["refined"]
    record(7, ok, "[D]^2 F~_d polynomial with value H_(d/D)(t^D)/D at D-th roots of unity, "
           "unknot and trefoil, d = (1), (2)", time.perf_counter() - t0)


@pytest.mark.xfail(strict=True, reason="the trefoil keeps a 1/[1]^2 pole in F~_(2); "
                   "only the refined pole statement holds")
def test_criterion_07_literal_form_on_trefoil():
    F = free_energy_of("trefoil", 3)
    assert check_pole_structure(F, (2,))["literal"]


def test_criterion_08_cut_and_join():
    t0 = time.perf_counter()
    ok = all(not check_schur_eigen(n) for n in range(1, 7))
    for name in ("unknot", "trefoil"):
        ok = ok and verify_framed_cutjoin(catalog(name), cap=2, K=2)["ok"]
    record(8, ok, "E s_A = kappa_A s_A for |A| <= 6; framed exp/log cut-and-join to tau^2, "
           "degree 2, unknot and trefoil", time.perf_counter() - t0, limit=60)


def test_criterion_09_lickorish_millett():
    t0 = time.perf_counter()
    ok = all(check_lickorish_millett(catalog(name))["ok"] for name in ("hopf", "torus(3,3)"))
    record(9, ok, "Lickorish-Millett lowest coefficient on Hopf and torus(3,3)",
           time.perf_counter() - t0)


def test_criterion_10_number_theory():
    t0 = time.perf_counter()
    failures = run_all()
    ok = all(not bad for bad in failures.values())
    record(10, ok, "binomial, multinomial, gcd and Fermat-type congruence sweeps",
           time.perf_counter() - t0, limit=60)


def test_criterion_11_powersum_oracle():
    t0 = time.perf_counter()
    ok = True
    for name in ("trefoil", "hopf"):
        L = catalog(name)
        for mu in colors_up_to(L.num_components, 3):
            ok = ok and zhat_powersum(L, mu).value == zhat_character_sum(L, mu)
    record(11, ok, "Z^_mu by characters = Z^_mu by power-sum cabling, ||mu|| <= 3, "
           "trefoil and Hopf", time.perf_counter() - t0)


def summary_lines():
    return [RESULTS[k] for k in sorted(RESULTS)]


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
