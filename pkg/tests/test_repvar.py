from fractions import Fraction
from itertools import product

import pytest

from mcp_rea.errors import SizeGuardError
from mcp_rea.repvar import (
    FiniteGroup,
    TwistData,
    TwistedHom,
    UnionFind,
    boundary_holonomy,
    burnside_count,
    cyclic_group,
    evaluate_word,
    evaluate_word_with_twist,
    group_from_json,
    groupoid_cardinality,
    orbit_count,
    parse_group,
    parse_twist,
    stabilizer,
    symmetric_group,
    twisted_conjugate,
    twisted_orbits,
)


@pytest.mark.fast
def test_z5_twisted_orbits():
    z5 = cyclic_group(5)
    assert orbit_count(z5, TwistData.parse(z5, "u2")) == 1
    assert orbit_count(z5, TwistData.parse(z5, "id")) == 5


@pytest.mark.fast
def test_twisted_conjugate_z5():
    z5 = cyclic_group(5)
    rho = TwistData.parse(z5, "u2")
    # h + g - 2h
    assert twisted_conjugate(z5, 1, TwistedHom((0,)), rho) == TwistedHom((4,))


@pytest.mark.fast
def test_evaluate_word_crossed_rule():
    z5 = cyclic_group(5)
    rho = TwistData.parse(z5, "u2")
    phi = TwistedHom((1,))
    assert evaluate_word(z5, phi, rho, [(0, 1), (0, 1)]) == 3
    assert evaluate_word(z5, phi, rho, [(0, -1)]) == 2
    assert evaluate_word(z5, phi, rho, [(0, 1), (0, -1)]) == 0


@pytest.mark.fast
def test_boundary_holonomy_of_commutator():
    z5 = cyclic_group(5)
    conmutador = [(0, 1), (1, 1), (0, -1), (1, -1)]
    assert boundary_holonomy(z5, TwistedHom((1, 2)), TwistData.parse(z5, "id,id"), conmutador) == 0
    # 1 + 2·2 + 2·(−1·3) + (−2) en Z5
    torcido = TwistData.parse(z5, "u2,id")
    assert boundary_holonomy(z5, TwistedHom((1, 2)), torcido, conmutador) == 2


@pytest.mark.fast
@pytest.mark.parametrize("spec,twists", [
    ("Z6", "u5,id"),
    ("Z8", "u3,u5"),
    ("Z12", "u7,u7,id"),
    ("S3", "inner:213"),
    ("S3", "inner:231,id"),
])
def test_union_find_matches_burnside(spec, twists):
    g = parse_group(spec)
    rho = TwistData.parse(g, twists)
    assert orbit_count(g, rho) == burnside_count(g, rho)
    assert groupoid_cardinality(g, rho) == Fraction(g.order) ** (rho.n - 1)


@pytest.mark.fast
def test_untwisted_s3_orbits_are_conjugacy_classes():
    s3 = symmetric_group(3)
    assert orbit_count(s3, TwistData.parse(s3, "id")) == 3
    identidad = TwistedHom((s3.id,))
    assert len(stabilizer(s3, identidad, TwistData.parse(s3, "id"))) == 6


@pytest.mark.fast
def test_orbits_cover_state_space():
    z4 = cyclic_group(4)
    orbitas = twisted_orbits(z4, TwistData.parse(z4, "u3,id"))
    estados = sorted(x for orbita in orbitas for x in orbita)
    assert estados == list(range(16))
    assert [o[0] for o in orbitas] == sorted(o[0] for o in orbitas)


@pytest.mark.fast
def test_parallel_orbits_match_serial():
    z6 = cyclic_group(6)
    rho = TwistData.parse(z6, "u5,u5")
    assert twisted_orbits(z6, rho, jobs=2) == twisted_orbits(z6, rho)


@pytest.mark.fast
def test_size_guard():
    z5 = cyclic_group(5)
    with pytest.raises(SizeGuardError):
        twisted_orbits(z5, TwistData.parse(z5, "id,id,id"), max_estados=100)


@pytest.mark.fast
def test_invalid_tables():
    with pytest.raises(ValueError):
        FiniteGroup.from_table([[0, 1], [1, 1]])
    with pytest.raises(ValueError):
        FiniteGroup.from_table([[1, 0], [0, 0]])
    with pytest.raises(ValueError):
        FiniteGroup.from_table([[0, 1, 2], [1, 0, 0], [2, 0, 1]])


@pytest.mark.fast
def test_group_from_json_file(fixtures):
    g = parse_group(str(fixtures / "z3.json"))
    assert g.order == 3
    assert g.element("a") == 1
    assert g.op(1, 2) == 0
    with pytest.raises(ValueError):
        group_from_json('{"order": 4, "mul": [[0, 1], [1, 0]]}')


@pytest.mark.fast
def test_invalid_twists():
    z4 = cyclic_group(4)
    with pytest.raises(ValueError):
        parse_twist(z4, "u2")
    with pytest.raises(ValueError):
        parse_twist(symmetric_group(3), "u2")
    with pytest.raises(ValueError):
        parse_twist(z4, "giro")
    with pytest.raises(ValueError):
        parse_group("Z0")


@pytest.mark.fast
def test_union_find():
    uf = UnionFind(5)
    uf.union(0, 1)
    uf.union(3, 4)
    uf.union(1, 0)
    assert uf.find(0) == uf.find(1)
    assert uf.find(2) != uf.find(3)
    assert len(uf) == 3


@pytest.mark.fast
@pytest.mark.parametrize("spec,twists", [
    ("S3", "inner:231,id"),
    ("Z6", "u5,id"),
    ("Z12", "u5"),
])
def test_twisted_conjugation_is_a_left_action(spec, twists):
    g = parse_group(spec)
    rho = TwistData.parse(g, twists)
    for valores in product(range(g.order), repeat=rho.n):
        phi = TwistedHom(valores)
        assert twisted_conjugate(g, g.id, phi, rho) == phi
        for h in range(g.order):
            tras_h = twisted_conjugate(g, h, phi, rho)
            for k in range(g.order):
                assert twisted_conjugate(g, k, tras_h, rho) == \
                    twisted_conjugate(g, g.op(k, h), phi, rho)


def _palabras(n: int, largo: int):
    letras = [(i, e) for i in range(n) for e in (1, -1)]
    for k in range(largo + 1):
        yield from (list(w) for w in product(letras, repeat=k))


@pytest.mark.fast
@pytest.mark.parametrize("spec,twists", [("S3", "inner:231,id"), ("Z5", "u2,u3")])
def test_evaluate_word_is_crossed_homomorphism(spec, twists):
    g = parse_group(spec)
    rho = TwistData.parse(g, twists)
    palabras = list(_palabras(2, 2))
    for valores in [(1, 2), (2, 1), (0, 1)]:
        phi = TwistedHom(valores)
        for w1 in palabras:
            primero, giro = evaluate_word_with_twist(g, phi, rho, w1)
            for w2 in palabras:
                segundo = evaluate_word(g, phi, rho, w2)
                assert evaluate_word(g, phi, rho, w1 + w2) == g.op(primero, giro(segundo))
