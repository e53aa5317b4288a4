import random

import pytest

from algebra.exactnum import Cyc
from algebra.polyfunc import RatFunc
from errors import BoundExceeded, NotCoprime
from symmetry.actions import (DomainMap, GaloisTwist, MoebiusMap, PunctureSet, VariableModel, apply_domain,
                              apply_image, build_domain_action, build_image_action, conjugation_action,
                              moebius_compose, trivial_image_action)

t = RatFunc.variable('t')
z = RatFunc.variable('z')
zbar = RatFunc.variable('zbar')
OMEGA = Cyc.root_of_unity(3)
I = Cyc.root_of_unity(4)
PAIR = VariableModel('z', True)


def moebius(expr, var='t'):
    return MoebiusMap.from_ratfunc(expr, var)


def test_normalization():
    assert MoebiusMap.of(2, 0, 0, 2) == MoebiusMap.identity()
    assert MoebiusMap.of(0, 3, 3, 0) == moebius(1 / t)
    with pytest.raises(ValueError):
        MoebiusMap.of(1, 2, 2, 4)


def test_from_ratfunc_rejects_nonlinear():
    assert moebius(t ** 2) is None
    assert moebius(RatFunc.constant(3)) is None
    assert moebius(t * z, 't') is None


def test_compose_and_inverse():
    s = moebius(1 - t)
    r = moebius(1 / t)
    assert moebius_compose(s, s).is_identity()
    assert moebius_compose(s, r) == moebius(1 - 1 / t)
    m = moebius(-1 / (t + 1))
    assert m.compose(m.inverse()).is_identity()
    assert m.compose(m).compose(m).is_identity()


def test_s3_action():
    group, action, punctures = build_domain_action([moebius(1 - t), moebius(1 / t)])
    assert group.order == 6
    assert not group.is_abelian()
    assert action.homomorphism_violations() == []
    assert len(punctures) == 2
    assert punctures.contains({'t': 0})
    assert punctures.contains({'t': 1})
    assert not punctures.contains({'t': 2})


def test_apply_domain():
    group, action, _ = build_domain_action([moebius(1 / t)])
    g = action.index_of(DomainMap(moebius(1 / t)))
    assert apply_domain(action, g, (1 - t ** 2) / (1 + t ** 2)) == (t ** 2 - 1) / (t ** 2 + 1)
    assert apply_domain(action, 0, t) == t


def test_rotations():
    for root, order in ((I, 4), (OMEGA, 3), (Cyc.zeta(12), 12)):
        group, action, punctures = build_domain_action([moebius(z * root, 'z')], model=VariableModel('z'))
        assert group.order == order
        assert group.is_abelian()
        assert len(punctures) == 0


def test_infinite_order_map():
    with pytest.raises(BoundExceeded):
        build_domain_action([moebius(t + 1)], bound=10)


HOMOMORPHISM_CASES = [
    ([1 / t], VariableModel('t'), 2),
    ([1 - t, 1 / t], VariableModel('t'), 6),
    ([-1 / (t + 1)], VariableModel('t'), 3),
    ([-t, 1 / t], VariableModel('t'), 4),
    ([(t - 1) / (t + 1)], VariableModel('t'), 4),
    ([2 - t], VariableModel('t'), 2),
    ([-t / (t + 1)], VariableModel('t'), 2),
    ([z * I], VariableModel('z'), 4),
    ([z * OMEGA], VariableModel('z'), 3),
]


@pytest.mark.parametrize('gens,model,order', HOMOMORPHISM_CASES)
def test_homomorphism_law(gens, model, order):
    maps = [DomainMap(moebius(g, model.var)) for g in gens]
    group, action, _ = build_domain_action(maps, model=model)
    assert group.order == order
    assert action.homomorphism_violations() == []


def test_reflections_in_pair_model():
    reflect = DomainMap(MoebiusMap.identity(), reflect=True)
    tilted = DomainMap(moebius(z * OMEGA, 'z'), reflect=True)
    assert reflect.compose(reflect) == DomainMap(MoebiusMap.identity())
    assert tilted.compose(tilted) == DomainMap(MoebiusMap.identity())
    group, action, _ = build_domain_action([tilted, reflect], model=PAIR)
    assert group.order == 6
    assert action.homomorphism_violations() == []
    g = action.index_of(tilted)
    assert apply_domain(action, g, z) == zbar * OMEGA
    assert apply_domain(action, g, zbar) == z * OMEGA.conjugate()


def test_galois_twists():
    kappa = GaloisTwist(-1, True)
    assert kappa.compose(kappa) == GaloisTwist(1, False)
    assert kappa.apply(z * I + zbar) == zbar * (-I) + z
    with pytest.raises(NotCoprime):
        GaloisTwist(2)
    galois = build_image_action([GaloisTwist(5), GaloisTwist(7)])
    assert galois.group.order == 4
    assert galois.homomorphism_violations() == []


def test_image_actions():
    assert trivial_image_action().group.order == 1
    act = conjugation_action(paired=True)
    assert act.group.order == 2
    assert apply_image(act, 1, z * OMEGA) == zbar * OMEGA.conjugate()
    assert apply_image(act, 0, z * OMEGA) == z * OMEGA


def test_pair_model_point_completion():
    point = PAIR.complete_point({'z': I})
    assert point['zbar'] == -I
    punctures = PunctureSet([(z * zbar - 1).num])
    assert punctures.contains({'z': I, 'zbar': -I})
    assert not punctures.contains({'z': 2, 'zbar': 2})


def random_ratfunc(rng, monomials):
    while True:
        num, den = (sum((m * (OMEGA * rng.randint(-3, 3) + I * rng.randint(-3, 3)) for m in monomials),
                        RatFunc.constant(0)) for _ in range(2))
        if not den.is_zero():
            return num / den


def test_image_action_is_ring_automorphism():
    rng = random.Random(632)
    monomials = [RatFunc.constant(1), z, zbar, z * zbar, z ** 2]
    for act in (conjugation_action(paired=True), build_image_action([GaloisTwist(5), GaloisTwist(7)])):
        for _ in range(30):
            f, g = random_ratfunc(rng, monomials), random_ratfunc(rng, monomials)
            for h in range(act.group.order):
                assert apply_image(act, h, f * g) == apply_image(act, h, f) * apply_image(act, h, g)
                assert apply_image(act, h, f + g) == apply_image(act, h, f) + apply_image(act, h, g)
                assert apply_image(act, h, apply_image(act, act.group.inv(h), f)) == f


def test_domain_action_inverse_undoes_substitution():
    rng = random.Random(632)
    reflect = DomainMap(MoebiusMap.identity(), reflect=True)
    tilted = DomainMap(moebius(z * OMEGA, 'z'), reflect=True)
    cases = [(build_domain_action([DomainMap(moebius(1 - t)), DomainMap(moebius(1 / t))]),
              [RatFunc.constant(1), t, t ** 2]),
             (build_domain_action([tilted, reflect], model=PAIR), [RatFunc.constant(1), z, zbar, z * zbar, z ** 2])]
    for (group, action, _), monomials in cases:
        for _ in range(30):
            f = random_ratfunc(rng, monomials)
            for g in range(group.order):
                assert apply_domain(action, g, apply_domain(action, group.inv(g), f)) == f
