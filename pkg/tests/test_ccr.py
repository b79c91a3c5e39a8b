import pytest
import sympy

from cswzw.services import ccr, exterior
from cswzw.services.ccr import CCRElement, GeneratorSet, RewriteStrategy, StarConvention
from cswzw.services.poisson import Pairing, PairingKind
from cswzw.services.reduction import LIN_OBS
from cswzw.utils import errors

I = sympy.I


def _table_pairing(forms, table):
    forms = list(forms)
    return lambda a, b: table[forms.index(a)][forms.index(b)]


@pytest.fixture
def weyl(sampler, exact):
    """Two even generators q, p with tau(q, p) = 1."""
    forms = [sampler.lin_obs(2), sampler.lin_obs(2)]
    return GeneratorSet.build(['q', 'p'], forms, _table_pairing(forms, [[0, 1], [-1, 0]]), exact,
                              require_differential=False)


@pytest.fixture
def clifford(sampler, exact):
    """Two odd generators with tau = 2 on the diagonal."""
    forms = [sampler.lin_obs(3), sampler.lin_obs(3)]
    return GeneratorSet.build(['a', 'b'], forms, _table_pairing(forms, [[2, 0], [0, 2]]), exact,
                              LIN_OBS)


def _same(left, right):
    return (left - right).is_zero()


def test_weyl_normal_order(weyl):
    pq = CCRElement.word(weyl, (1, 0))
    assert _same(pq, CCRElement.from_terms(weyl, [((0, 1), 1), ((), -I)]))
    assert all(r.passed for r in ccr.check_relations(weyl))
    q, p = CCRElement.generator(weyl, 'q'), CCRElement.generator(weyl, 'p')
    assert _same(ccr.commutator(q, p), CCRElement.one(weyl).scale(I))


def test_rewriting_is_confluent(weyl, clifford):
    for generators, word in ((weyl, (1, 1, 0, 0, 1)), (clifford, (1, 0, 1, 0, 0))):
        first = CCRElement.word(generators, word, strategy=RewriteStrategy.FIRST)
        last = CCRElement.word(generators, word, strategy=RewriteStrategy.LAST)
        assert _same(first, last)
        assert all(generators.is_normal(w) for w, _ in first.terms)


def test_odd_generators_square_to_scalars(clifford):
    aa = CCRElement.word(clifford, (0, 0))
    assert _same(aa, CCRElement.one(clifford).scale(I))
    ba = CCRElement.word(clifford, (1, 0))
    assert _same(ba, CCRElement.word(clifford, (0, 1)).scale(-1))


def test_star(weyl, clifford):
    q = CCRElement.generator(weyl, 0)
    assert _same(ccr.star(q.scale(I)), q.scale(-I))
    element = CCRElement.from_terms(weyl, [((1, 0), 2 + I), ((0,), 3)])
    assert _same(ccr.star(ccr.star(element)), element)
    assert all(r.passed for r in ccr.check_star_closure(weyl))
    # Koszul sign on a product of odd generators, none for the plain star
    ab = CCRElement.word(clifford, (0, 1))
    assert _same(ccr.star(ab), CCRElement.word(clifford, (1, 0)).scale(-1))
    plain = clifford.with_star(StarConvention.PLAIN)
    assert _same(ccr.star(CCRElement.word(plain, (0, 1))), CCRElement.word(plain, (1, 0)))


def test_differential_of_closed_generators(clifford):
    element = CCRElement.from_terms(clifford, [((0, 1), 1), ((1,), 2)])
    assert ccr.differential(element).is_zero()


def test_differential_needs_a_closed_set(weyl):
    with pytest.raises(errors.GeneratorClosureError):
        ccr.differential(CCRElement.generator(weyl, 0))


def test_generator_set_validation(sampler, exact):
    forms = [sampler.lin_obs(2), sampler.lin_obs(2)]
    with pytest.raises(errors.WorkbenchError):
        GeneratorSet.build(['x', 'x'], forms, _table_pairing(forms, [[0, 1], [-1, 0]]), exact,
                           require_differential=False)
    with pytest.raises(errors.ConsistencyError):
        GeneratorSet.build(['x', 'y'], forms, _table_pairing(forms, [[0, 1], [1, 0]]), exact,
                           require_differential=False)
    with pytest.raises(errors.GeneratorClosureError):
        GeneratorSet.build(['phi'], [sampler.lin_obs(1)], lambda a, b: 0, exact, LIN_OBS)


def test_mixed_sets_do_not_multiply(weyl, clifford):
    with pytest.raises(errors.WorkbenchError):
        CCRElement.generator(weyl, 0) * CCRElement.generator(clifford, 0)


def test_observables_and_their_differentials(geometry, sampler, exact):
    phis = [sampler.lin_obs(d) for d in (0, 1, 2)]
    forms = phis + [exterior.d(phi) for phi in phis]
    labels = ['phi0', 'phi1', 'phi2', 'dphi0', 'dphi1', 'dphi2']
    tau = Pairing(PairingKind.TAU_ZERO, geometry, exact)
    generators = GeneratorSet.build(labels, forms, tau.value, exact, LIN_OBS)
    assert all(r.passed for r in ccr.check_relations(generators))
    word = CCRElement.word(generators, (3, 0, 4))
    assert ccr.differential(ccr.differential(word)).is_zero()
    identity = ccr.identity_transport(generators)
    assert _same(identity(word), word)
