"""
Suites for the CCR algebra: the defining relations on a mixed-degree
generator set, rewriting confluence, associativity, the star and the
differential, and transport along pi_* and kappa.
"""

from typing import Tuple

import sympy

from cswzw.models.report import CheckRecord
from cswzw.services import ccr, exterior
from cswzw.services.ccr import CCRElement, GeneratorSet, RewriteStrategy, StarConvention, Transport
from cswzw.services.homotopy import member
from cswzw.services.poisson import Pairing, PairingKind, sigma_zero, upsilon_zero
from cswzw.services.reduction import (
    BASE_OBS,
    CHIRAL_BOSON,
    COLLAR_OBS,
    LIN_OBS,
    UnitBump,
    boundary_cochains,
    reduction_cochains,
    verify_reduction_sdr,
)
from cswzw.services.serialization import form_from_dict
from cswzw.suites.base_suite import BaseSuite
from cswzw.utils import errors

# de Rham degrees of the observables whose differentials complete the set
OBSERVABLE_DEGREES = (0, 1, 2, 0, 1, 2)
BOSON_COUNT = 4


class CCRSuiteMixin:
    def scalar(self, real: int, imaginary: int = 0):
        if self.arithmetic.is_exact:
            return sympy.Integer(real) + sympy.I * imaginary
        return complex(real, imaginary)

    def random_word(self, generators: GeneratorSet, max_length: int = 3) -> Tuple[int, ...]:
        length = int(self.rng.integers(0, max_length + 1))
        return tuple(int(i) for i in self.rng.integers(0, len(generators), size=length))

    def random_element(self, generators: GeneratorSet, max_words: int = 3, max_length: int = 3) -> CCRElement:
        terms = []
        for _ in range(int(self.rng.integers(1, max_words + 1))):
            coefficient = self.scalar(int(self.rng.integers(-3, 4)), int(self.rng.integers(-2, 3)))
            terms.append((self.random_word(generators, max_length), coefficient))
        return CCRElement.from_terms(generators, terms)

    def agreement(self, identity: str, sample_id: str, left: CCRElement, right: CCRElement) -> CheckRecord:
        residual = (left - right).max_coefficient()
        return self.report.add(CheckRecord(identity, sample_id, residual, self.arithmetic.within_tolerance(residual)))

    def observable_generators(self) -> GeneratorSet:
        """
        The scenario's declared generators, or else six linear observables
        and their differentials (a d-closed twelve-element set).
        """
        declared = self.config.generators
        if declared:
            labels = [g.get('label', f"x{i}") for i, g in enumerate(declared)]
            forms = [form_from_dict(self.geometry, g['form']) for g in declared]
            for label, form in zip(labels, forms):
                self.check("declared generator lies in LinObs", label,
                           member(self.geometry, LIN_OBS, form, self.arithmetic))
        else:
            phis = [self.sampler.lin_obs(d) for d in OBSERVABLE_DEGREES]
            labels = [f"phi{k}" for k in range(len(phis))] + [f"dphi{k}" for k in range(len(phis))]
            forms = phis + [exterior.d(phi) for phi in phis]
        tau = Pairing(PairingKind.TAU_ZERO, self.geometry, self.arithmetic)
        return GeneratorSet.build(labels, forms, tau.value, self.arithmetic, LIN_OBS,
                                  StarConvention(self.config.star))


class CCRRelationsSuite(CCRSuiteMixin, BaseSuite):
    name = 'ccr_relations'

    def execute(self) -> None:
        generators = self.observable_generators()
        self.report.summary['generators'] = generators.to_dict()
        self.record(ccr.check_relations(generators))
        self.record(ccr.check_star_closure(generators))

        one = CCRElement.one(generators)
        self.agreement("d1 = 0", "unit", ccr.differential(one), CCRElement.zero(generators))
        self.agreement("1* = 1", "unit", ccr.star(one), one)
        for i in range(len(generators)):
            x = CCRElement.generator(generators, i)
            self.agreement("x 1 = x = 1 x", generators.labels[i], x * one, one * x)
            j = int(self.rng.integers(0, len(generators)))
            bracket = ccr.commutator(x, CCRElement.generator(generators, j))
            self.check("generator commutator is central", f"{generators.labels[i]},{generators.labels[j]}",
                       all(word == () for word, _ in bracket.terms))

        for k in range(self.n_samples):
            self._confluence(generators, k)
            a, b, c = (self.random_element(generators, 2, 2) for _ in range(3))
            self.agreement("(ab)c = a(bc)", f"t{k}", (a * b) * c, a * (b * c))
            element = self.random_element(generators)
            self.agreement("d^2 = 0", f"w{k}", ccr.differential(ccr.differential(element)),
                           CCRElement.zero(generators))
            self.agreement("a** = a", f"w{k}", ccr.star(ccr.star(element)), element)
            self._leibniz(generators, k)

    def _confluence(self, generators: GeneratorSet, k: int) -> None:
        word = self.random_word(generators, 5)
        first = CCRElement.word(generators, word, strategy=RewriteStrategy.FIRST)
        last = CCRElement.word(generators, word, strategy=RewriteStrategy.LAST)
        self.agreement("rewriting is confluent", f"w{k}", first, last)
        fixed = all(generators.is_normal(w) for w, _ in first.terms)
        again = CCRElement.from_terms(generators, first.terms)
        self.check("normal form is a fixpoint", f"w{k}", fixed and (again - first).is_zero())

    def _leibniz(self, generators: GeneratorSet, k: int) -> None:
        u, v = self.random_word(generators, 2), self.random_word(generators, 2)
        a, b = CCRElement.word(generators, u), CCRElement.word(generators, v)
        sign = -1 if generators.word_degree(u) % 2 else 1
        expected = ccr.differential(a) * b + (a * ccr.differential(b)).scale(sign)
        self.agreement("d(ab) = (da)b + (-1)^|a| a(db)", f"p{k}", ccr.differential(a * b), expected)


class CCRTransportSuite(CCRSuiteMixin, BaseSuite):
    name = 'ccr_transport'

    def execute(self) -> None:
        source = self.observable_generators()
        bump = UnitBump.inside(*self.config.bump_time_interval)
        pi_star = reduction_cochains(self.geometry, bump)['pi_star']
        target = self._image_generators(source, pi_star, BASE_OBS,
                                        lambda a, b: sigma_zero(a, b, self.arithmetic))
        self._transport("pi_*", pi_star, source, target)
        self.record(verify_reduction_sdr(self.geometry, bump, source.forms, target.forms, self.arithmetic))
        self.expect_error("rescaled pi_* is not a Poisson morphism", errors.PoissonMorphismError,
                          lambda: Transport.build(pi_star.scale(2), source, target))

        collar_bump = UnitBump.inside(*self.config.bump_interval)
        kappa = boundary_cochains(self.geometry, collar_bump)['kappa']
        bosons = [self.sampler.chiral_boson() for _ in range(BOSON_COUNT)]
        boson_set = GeneratorSet.build([f"w{k}" for k in range(BOSON_COUNT)], bosons,
                                       lambda a, b: upsilon_zero(a, b, self.arithmetic), self.arithmetic,
                                       CHIRAL_BOSON, StarConvention(self.config.star))
        collar = self._image_generators(boson_set, kappa, COLLAR_OBS,
                                        lambda a, b: sigma_zero(a, b, self.arithmetic))
        self._transport("kappa", kappa, boson_set, collar)

        identity = ccr.identity_transport(source)
        for k in range(min(self.n_samples, 20)):
            element = self.random_element(source)
            self.agreement("identity transports identically", f"i{k}", identity(element), element)

    def _image_generators(self, source: GeneratorSet, morphism, complex_id, pairing) -> GeneratorSet:
        images = [morphism(form) for form in source.forms]
        labels, forms = ccr.independent_images(images, [f"{morphism.name}({l})" for l in source.labels])
        return GeneratorSet.build(labels, forms, pairing, self.arithmetic, complex_id,
                                  StarConvention(self.config.star))

    def _transport(self, name: str, morphism, source: GeneratorSet, target: GeneratorSet) -> None:
        try:
            transport = Transport.build(morphism, source, target)
        except errors.PoissonMorphismError as e:
            self.check(f"{name} is a Poisson morphism", name, False, {'message': str(e)})
            return
        self.check(f"{name} is a Poisson morphism", name, True, {'targets': len(target)})
        for k in range(self.n_samples):
            a, b = self.random_element(source, 2, 2), self.random_element(source, 2, 2)
            self.agreement(f"{name}: T(ab) = T(a)T(b)", f"p{k}", transport(a * b), transport(a) * transport(b))
            self.agreement(f"{name}: T(a*) = T(a)*", f"p{k}", transport(ccr.star(a)), ccr.star(transport(a)))
            self.agreement(f"{name}: T(da) = dT(a)", f"p{k}", transport(ccr.differential(a)),
                           ccr.differential(transport(a)))
