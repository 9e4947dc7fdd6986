"""Property suites behind ``lmov verify``.

Each suite returns a list of rows {"name", "ok", "detail"}; details are
short strings so reports stay deterministic.
"""

from fractions import Fraction

from .combinatorics import cut_joins, enumerate_spartitions, kappa, partitions_of, z_of


def _row(name, ok, detail=""):
    return {"name": name, "ok": bool(ok), "detail": detail}


def suite_combinatorics():
    rows = []
    ok = all(sum(Fraction(1, z_of(mu)) for mu in partitions_of(n)) == 1 for n in range(1, 9))
    rows.append(_row("sum 1/z_mu = 1 for n <= 8", ok))
    ok = all(sum(mu[i] * (mu[i] - 2 * i - 1) for i in range(len(mu))) == kappa(mu)
             for n in range(1, 8) for mu in partitions_of(n))
    rows.append(_row("kappa = sum mu_j (mu_j - 2j + 1)", ok))
    ok = True
    for n in range(1, 7):
        for mu in partitions_of(n):
            cuts, joins = cut_joins(mu)
            if any(len(c) != len(mu) + 1 for c in cuts) or any(len(j) != len(mu) - 1
                                                               for j in joins):
                ok = False
    rows.append(_row("cuts add a row, joins remove one", ok))
    rows.append(_row("theta convolution = formal log, random Z, degree 5", _theta_log_check()))
    return rows


def _theta_log_check(seed=3, D=5):
    """F_mu = sum theta_Lambda prod Z_beta agrees with log of the series sum Z_mu p_mu."""
    import random
    from .cutjoin import FormalSeries, series_log
    rng = random.Random(seed)
    Z = {}
    for n in range(1, D + 1):
        for mu in partitions_of(n):
            Z[(mu,)] = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
    series = FormalSeries(1, D, 0, {(mu, 0, 0): c for mu, c in Z.items()})
    series = series + FormalSeries.one(1, D)
    logged = series_log(series)
    for mu in Z:
        total = Fraction(0)
        for sp in enumerate_spartitions(mu):
            term = sp.theta
            for beta in sp.parts:
                term *= Z[beta]
            total += term
        if total != logged.terms.get((mu, 0, 0), 0):
            return False
    return True


def suite_symfun():
    from .symfun import (CharacterTable, principal_specialization, quantum_dimension,
                         quantum_dimension_at, quantum_dimension_hook, schur_to_power)
    rows = []
    ok = all(CharacterTable(n).orthogonality_defect() == 0 for n in range(1, 7))
    rows.append(_row("character orthogonality n <= 6", ok))
    ok = all(quantum_dimension(A) == quantum_dimension_hook(A)
             for n in range(1, 5) for A in partitions_of(n))
    rows.append(_row("quantum dimension: character sum = hook-content", ok))
    ok = all(quantum_dimension_at(A, N) == principal_specialization(A, N)
             for n in range(1, 4) for A in partitions_of(n) for N in (2, 3, 4))
    rows.append(_row("dim_q at t = q^N equals principal specialisation", ok))
    ok = all(schur_to_power(A).to_schur().terms == {(A,): 1}
             for n in range(1, 6) for A in partitions_of(n))
    rows.append(_row("Schur <-> power-sum round trip", ok))
    return rows


def suite_cutjoin():
    from .braid_link import catalog
    from .cutjoin import (FormalSeries, check_cut_join_support, check_log_exp,
                          check_schur_eigen, verify_framed_cutjoin)
    import random
    rows = []
    rows.append(_row("E s_A = kappa_A s_A, |A| <= 6",
                     not any(check_schur_eigen(n) for n in range(1, 7))))
    rows.append(_row("E transitions are cuts and joins, |mu| <= 6",
                     not any(check_cut_join_support(n) for n in range(1, 7))))
    rng = random.Random(7)
    ok = True
    for _ in range(3):
        terms = {}
        for n in range(1, 6):
            for mu in partitions_of(n):
                if rng.random() < 0.5:
                    terms[((mu,), 0, 0)] = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
        ok = ok and check_log_exp(FormalSeries(1, 5, 0, terms))
    rows.append(_row("L F = exp(-F) E exp(F), random F, D = 5", ok))
    for name in ("unknot", "trefoil"):
        r = verify_framed_cutjoin(catalog(name), cap=2, K=2)
        rows.append(_row("framed cut-and-join on %s, degree 2, tau order 2" % name, r["ok"]))
    return rows


def suite_numtheory():
    from .numtheory import run_all
    return [_row(name, not bad, "%d failures" % len(bad)) for name, bad in
            sorted(run_all().items())]


def suite_engine():
    from .braid_link import catalog
    from .quantum_engine import (colored_invariant, full_twist_eigen_check, invariant_at_N,
                                 zhat_powersum)
    from .hecke import ConsistencyError
    from .skein import fundamental_invariant
    from .symfun import quantum_dimension
    rows = []
    ok = all(colored_invariant(catalog("unknot"), (A,)) == quantum_dimension(A)
             for n in range(1, 4) for A in partitions_of(n))
    rows.append(_row("unknot gives quantum dimensions, |A| <= 3", ok))
    for name in ("trefoil", "hopf", "torus(2,5)"):
        L = catalog(name)
        ok = colored_invariant(L, tuple((1,) for _ in range(L.num_components))) \
            == fundamental_invariant(L)
        rows.append(_row("fundamental colour = skein oracle on %s" % name, ok))
    ok = all(full_twist_eigen_check(A, 3) for A in ((1,), (2,), (1, 1), (2, 1)))
    rows.append(_row("full twist acts by q^{kappa/2}", ok))
    L = catalog("trefoil")
    ok = all(invariant_at_N(L, ((2,),), N) == colored_invariant(L, ((2,),)).specialize_t(N)
             for N in (2, 3))
    rows.append(_row("explicit R-matrix at N = 2, 3 matches generic N (trefoil, (2))", ok))
    L = catalog("hopf")
    ok = True
    for mu in (((1,), (1,)), ((2,), (1,)), ((1, 1), (1,))):
        try:
            zhat_powersum(L, mu)
        except ConsistencyError:
            ok = False
    rows.append(_row("power-sum cabling = character sum on hopf", ok))
    return rows


SUITES = {
    "combinatorics": suite_combinatorics,
    "symfun": suite_symfun,
    "cutjoin": suite_cutjoin,
    "numtheory": suite_numtheory,
    "engine": suite_engine,
}


def run_suite(name):
    return SUITES[name]()


__all__ = ["SUITES", "run_suite"]
