import random
from fractions import Fraction
from functools import lru_cache
from typing import Any, Dict, Iterable, List, Optional

import numpy as np

from hodgepack.clifford import QuadFormDiag, center_element
from hodgepack.exception import AdmissibilityError
from hodgepack.hodge import (HodgeTable, half_twist, random_table,
                             require_valid, tate_twist, tensor_K_halfmodule,
                             trivial_table, weight_two_table)
from hodgepack.ks import (binomial, check_S0_tensor_S1, full_report,
                          summand_dims, summand_table)
from hodgepack.polar import (PolarizedSetup, explicit_period, hermitian_form,
                             positivity_oracle, random_K_matrix,
                             random_unitary, signature_H, transport,
                             twisted_polarization, uH_matrices)
from hodgepack.quat import (check_reciprocity, hilbert_symbol, norm_eq_search,
                            relevant_places)
from hodgepack.spin import (build_f_basis, check_invariance, decompose,
                            endo_operators, form_algebra, spin_algebra,
                            uH_generators)
from hodgepack.verify.check import Check, expect

__all__ = [
    'grid_forms', 'split_forms', 'CliffordRelations', 'SpinDimensions',
    'EndoOperators', 'UnitaryInvariance', 'SplitConsistency', 'TwistAlgebra',
    'TensorDecomposition', 'SummandHodge', 'K3Instance', 'Polarization',
    'default_checks'
]

_PRIMES = (2, 3, 5, 7, 11, 13)


def grid_forms(ds: Iterable[int] = (1, 2, 3, 7),
               ms: Iterable[int] = (2, 3, 4, 5)) -> List[QuadFormDiag]:
    """
    Three diagonal vectors with d_1 < 0 for every (d, m).
    """
    forms = []
    for d in ds:
        for m in ms:
            for diag in ([-1] + [1] * (m - 1), [-2] + list(range(2, m + 1)),
                         [Fraction(-3, 2)] + list(_PRIMES[:m - 1])):
                forms.append(QuadFormDiag(d, tuple(diag)))
    return forms


def split_forms() -> List[QuadFormDiag]:
    """
    Forms with m = 2 (mod 4) whose split verdicts have small witnesses.
    """
    # yapf: disable
    return [QuadFormDiag(d, tuple(diag)) for d, diag in [
        (1, [-1, 1]), (1, [-1, 2]), (1, [-1, 3]), (2, [-1, 3]),
        (3, [-1, 7]), (7, [-2, 4]), (3, [-1, 2]), (7, [-1, 2]),
        (5, [-1, 6]), (2, [-1, 1, 1, 1, 1, 1]), (3, [-1, 1, 1, 1, 1, 2]),
        (1, [-3, 1, 1, 1, 1, 1])
    ]]
    # yapf: enable


@lru_cache(maxsize=None)
def _decomposition(form: QuadFormDiag):
    return decompose(form)


class _ConfiguredCheck(Check):
    def _set_verifier(self, verifier: Any) -> None:
        self.configs = verifier.configs
        self.rng = random.Random(verifier.seed)

    def option(self, key: str, default: Any) -> Any:
        return self.configs.select(key, default)


class CliffordRelations(_ConfiguredCheck):
    name = 'clifford'

    def _cases(self) -> Iterable[QuadFormDiag]:
        return grid_forms()

    def _run_case(self, form: QuadFormDiag) -> None:
        fb = build_f_basis(form)
        expect('delta', form.delta, fb.delta, form=form)
        center_element(form)


class SpinDimensions(_ConfiguredCheck):
    name = 'spin-dims'

    def _cases(self) -> Iterable[QuadFormDiag]:
        limit = self.option('exact.max_m', 5)
        return [form for form in grid_forms() if form.m <= limit]

    def _run_case(self, form: QuadFormDiag) -> None:
        decomposition = _decomposition(form)
        expect('dim S', 2**(form.m + 1), decomposition.S.rank, form=form)
        expect('sum of dim S_i', decomposition.S.rank,
               sum(decomposition.dims()), form=form)


class EndoOperators(_ConfiguredCheck):
    name = 'endo'

    def _cases(self) -> Iterable[QuadFormDiag]:
        limit = self.option('exact.max_m', 5)
        return [form for form in grid_forms() if form.m <= limit]

    def _run_case(self, form: QuadFormDiag) -> None:
        decomposition = _decomposition(form)
        endo_operators(decomposition.fbasis, decomposition.S)


class UnitaryInvariance(_ConfiguredCheck):
    name = 'invariance'

    def _cases(self) -> Iterable[QuadFormDiag]:
        limit = self.option('invariance.max_m', 4)
        return [form for form in grid_forms() if form.m <= limit]

    def _run_case(self, form: QuadFormDiag) -> None:
        gens = uH_generators(form)
        report = check_invariance(gens, _decomposition(form),
                                  self.option('selftest.witness_bound', 200))
        expect('invariance failures', [], report.failures, form=form)
        expect('commutant dims',
               [4 if 2 * i == form.m else 2 for i in range(form.m + 1)],
               report.commutant_dims,
               form=form)
        if form == QuadFormDiag(1, (-1, 1)):
            expect('idempotent rank', binomial(2, 1),
                   report.endo[1].detail.get('idempotent_rank'), form=form)


class SplitConsistency(_ConfiguredCheck):
    name = 'split'

    def _cases(self) -> Iterable[QuadFormDiag]:
        return split_forms()

    def _run_case(self, form: QuadFormDiag) -> Dict[str, Any]:
        algebra, reference = spin_algebra(form), form_algebra(form)
        split = algebra.is_split()
        expect('split verdict of (-d, -prod d_i)', split,
               reference.is_split(), form=form)
        expect('(delta, d delta) = (-d, -prod d_i)', True,
               algebra.equivalent(reference), form=form)
        if split:
            bound = self.option('selftest.witness_bound', 200)
            witness = norm_eq_search(form.norm_target, form.d, bound)
            expect('witness found', True, witness is not None, form=form)
        return {
            'split': split,
            'm_mod_4': form.m % 4,
            'd_mod_4': form.d % 4
        }

    def _finalize(self) -> Dict[str, Any]:
        pairs = self.option('selftest.pairs', 500)

        def sample() -> Fraction:
            value = Fraction(self.rng.randint(1, 1000),
                             self.rng.randint(1, 100))
            return value if self.rng.random() < 0.5 else -value

        for _ in range(pairs):
            a, b, c = sample(), sample(), sample()
            check_reciprocity(a, b)
            for place in relevant_places(a, b, c):
                expect('bimultiplicativity',
                       hilbert_symbol(a, b, place) *
                       hilbert_symbol(c, b, place),
                       hilbert_symbol(a * c, b, place), a=a, b=b, c=c,
                       place=place)
        return {'reciprocity_pairs': pairs}


def _defined(fn, *args) -> Optional[HodgeTable]:
    try:
        return fn(*args)
    except AdmissibilityError:
        return None


class TwistAlgebra(_ConfiguredCheck):
    name = 'twists'

    def _cases(self) -> Iterable[HodgeTable]:
        return [
            random_table(self.rng)
            for _ in range(self.option('selftest.tables', 200))
        ]

    def _run_case(self, t: HodgeTable) -> None:
        require_valid(t)
        for n in range(-2, 3):
            twisted = _defined(half_twist, t, n)
            if twisted is None:
                continue
            require_valid(twisted)
            expect('weight of V_{n/2}', t.weight - n, twisted.weight)
            expect('dim of V_{n/2}', t.dim_q(), twisted.dim_q())
            for p in range(-2, 3):
                left = _defined(half_twist, twisted, p)
                right = _defined(half_twist, t, n + p)
                if left is not None and right is not None:
                    expect('(V_{n/2})_{p/2} = V_{(n+p)/2}', right, left, n=n,
                           p=p)
            for q in range(-2, 3):
                left = tate_twist(twisted, q)
                right = _defined(half_twist, tate_twist(t, q), n)
                if right is not None:
                    expect('(V_{n/2})(q) = (V(q))_{n/2}', left, right, n=n,
                           q=q)
                    expect('weight of V(q)', t.weight - 2 * q,
                           tate_twist(t, q).weight)

    def _finalize(self) -> Dict[str, Any]:
        K = trivial_table()
        tate, twice = tate_twist(K, -1), half_twist(K, -2)
        expect('V(-1) and (V_{-1/2})_{-1/2} differ', True, tate != twice)
        return {}


class TensorDecomposition(TwistAlgebra):
    name = 'tensor'

    def _run_case(self, t: HodgeTable) -> None:
        diag, conj = tensor_K_halfmodule(t)
        expect('diag part = V_{-1/2}', half_twist(t, -1), diag)
        expect('dim diag + dim conj', 2 * t.dim_q(),
               diag.dim_q() + conj.dim_q())
        positive = _defined(half_twist, t, 1)
        if positive is not None:
            expect('conj part = V_{1/2}(-1)', tate_twist(positive, -1), conj)
            expect('V inside V_{1/2} tensor K_{-1/2}', t,
                   tensor_K_halfmodule(positive)[0])

    def _finalize(self) -> Dict[str, Any]:
        return {}


class SummandHodge(_ConfiguredCheck):
    name = 'theorem'

    def _cases(self) -> Iterable[int]:
        return range(2, self.option('selftest.theorem_max_m', 16) + 1)

    def _run_case(self, m: int) -> None:
        V = weight_two_table(m)
        for i in range(m + 1):
            expect(f'S_{i}^(1,0) dims',
                   (binomial(m - 1, i - 1), binomial(m - 1, i)),
                   summand_dims(V, i), m=m)
        expect('sum of dim S_i', 2**(m + 1),
               sum(summand_table(V, i).dim_q() for i in range(m + 1)), m=m)
        expect('V inside S_0 tensor S_1', True, check_S0_tensor_S1(V), m=m)
        if m <= self.option('exact.max_m', 5):
            form = QuadFormDiag(1, (-1, ) + (1, ) * (m - 1))
            dims = _decomposition(form).dims()
            expect('dim S_i / 2', [binomial(m, i) for i in range(m + 1)],
                   [dim // 2 for dim in dims], m=m)


class K3Instance(_ConfiguredCheck):
    name = 'k3'

    def _cases(self) -> Iterable[int]:
        return [10]

    def _run_case(self, m: int) -> None:
        form = QuadFormDiag(3, (-1, ) + (1, ) * (m - 1))
        report = full_report(form, weight_two_table(m), 'fast',
                             self.option('bound', 50))
        expect('dim V', 20, report.dim_V)
        expect('h^(2,0)', 1, report.h20)
        expect('h^(1,1)', 18, report.h11)
        expect('dim S_1', 20, report.parts[1].dim)
        expect('S_1^(1,0) dims', [1, 9], report.parts[1].hodge)
        expect('ball dimension', 9, report.ball_dim)
        expect('dims S_i', [2, 20, 90, 240, 420, 504, 420, 240, 90, 20, 2],
               [part.dim for part in report.parts])


class Polarization(_ConfiguredCheck):
    name = 'polarization'

    def _cases(self) -> Iterable[QuadFormDiag]:
        return grid_forms()

    def _run_case(self, form: QuadFormDiag) -> None:
        s = PolarizedSetup.diagonal(form)
        expect('signature of H', (form.m - 1, 1), signature_H(s), form=form)
        P = twisted_polarization(s)
        J = s.J
        value = sum(P[0][k] * J[k][0] for k in range(form.dim))
        expect("Psi'(e_1, phi e_1)", -form.d * form.diag[0], value, form=form)

    def _finalize(self) -> Dict[str, Any]:
        forms = [form for form in grid_forms() if form.m <= 3]
        for _ in range(self.option('selftest.transports', 50)):
            form = self.rng.choice(forms)
            s = transport(PolarizedSetup.diagonal(form),
                          random_K_matrix(self.rng, form.m, form.d))
            hermitian_form(s)
            expect('signature of transported H', (form.m - 1, 1),
                   signature_H(s), form=form)
            twisted_polarization(s)

        generator = np.random.default_rng(self.verifier.seed)
        tolerance = self.option('oracle.tolerance', 1e-9)
        transports = self.option('oracle.transports', 20)
        for form in (QuadFormDiag(3, (-1, 1)), QuadFormDiag(1, (-1, 2, 3))):
            s = PolarizedSetup.diagonal(form)
            period = explicit_period(s)
            expect('positivity of the explicit period', True,
                   positivity_oracle(s, period, tolerance), form=form)
            matrices = uH_matrices(s)
            for _ in range(transports):
                g = random_unitary(matrices, generator)
                expect('positivity after U(H) transport', True,
                       positivity_oracle(s, g @ period, tolerance), form=form)
        return {'oracle_transports': 2 * transports}


def default_checks() -> List[Check]:
    return [
        CliffordRelations(),
        SpinDimensions(),
        EndoOperators(),
        UnitaryInvariance(),
        SplitConsistency(),
        TwistAlgebra(),
        TensorDecomposition(),
        SummandHodge(),
        K3Instance(),
        Polarization()
    ]
