from math import factorial

import pytest

from mcp_rea.errors import PatternError
from mcp_rea.pattern import (
    DecoratedPattern,
    GluingPattern,
    PairClass,
    all_patterns,
    boundary_cycles,
    boundary_holonomies,
    boundary_words,
    class_table,
    classify_pair,
    extends_over_caps,
    parse_pattern,
    pattern_text,
    surface_invariants,
)

# Un representante por clase
CLASES = [
    ((1, 3, 2, 4), PairClass.POS_LINKED),
    ((2, 4, 1, 3), PairClass.NEG_LINKED),
    ((1, 4, 2, 3), PairClass.POS_NESTED),
    ((2, 3, 1, 4), PairClass.NEG_NESTED),
    ((1, 2, 3, 4), PairClass.POS_UNLINKED),
    ((3, 4, 1, 2), PairClass.NEG_UNLINKED),
]


@pytest.mark.fast
@pytest.mark.parametrize("secuencia,clase", CLASES)
def test_classify_pair(secuencia, clase):
    assert classify_pair(GluingPattern.from_sequence(secuencia), 1, 2) == clase


@pytest.mark.fast
def test_classify_pair_out_of_range():
    patron = GluingPattern.from_sequence((1, 3, 2, 4))
    with pytest.raises(PatternError):
        classify_pair(patron, 2, 1)
    with pytest.raises(PatternError):
        classify_pair(patron, 1, 3)


@pytest.mark.fast
def test_reference_surfaces(fixtures):
    esfera = parse_pattern((fixtures / "sphere3.pat").read_text())
    assert surface_invariants(esfera.pattern) == (0, 3)
    assert class_table(esfera.pattern) == [(1, 2, PairClass.POS_UNLINKED)]

    toro = parse_pattern((fixtures / "linked_flip.pat").read_text())
    assert surface_invariants(toro.pattern) == (1, 1)
    assert toro.labels == ("flip", "id")
    assert toro.dynkin == "A2"


@pytest.mark.fast
def test_single_edge_is_annulus():
    patron = GluingPattern((1,), (2,))
    assert boundary_cycles(patron) == [[0], [1]]
    assert surface_invariants(patron) == (0, 2)


@pytest.mark.fast
@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_euler_characteristic_all_patterns(n):
    cuenta = 0
    for patron in all_patterns(n):
        cuenta += 1
        g, r = surface_invariants(patron)
        assert g >= 0
        assert n == 2 * g + r - 1
    assert cuenta == factorial(2 * n) // 2**n


@pytest.mark.fast
def test_relabel_swaps_edges():
    patron = GluingPattern.from_sequence((1, 3, 2, 4))
    assert patron.relabel([1, 0]).sequence() == (2, 4, 1, 3)


@pytest.mark.fast
def test_bad_pattern_reports_line(fixtures):
    with pytest.raises(PatternError) as error:
        parse_pattern((fixtures / "bad.pat").read_text())
    assert error.value.line == 2
    assert str(error.value).startswith("línea 2: ")


@pytest.mark.fast
@pytest.mark.parametrize("texto,linea", [
    ("n = 2\nP = 1 3 2 4\ncolor = rojo\n", 3),
    ("n = 2\nP = 1 3 2\n", 2),
    ("n = dos\nP = 1 2\n", 1),
    ("n = 1\nP = 1 2\nlabels = id id\n", 3),
    ("n = 1\nP = 1 2\nlabels = giro\n", 3),
    ("n = 1\nP = 1 2\nD = A1\nlabels = flip\n", 4),
    ("n = 1\nP = 1 2\nD = E6\n", 3),
    ("n = 1\nP = 1 1\n", 2),
    ("n = 1\nP 1 2\n", 2),
    ("n = 1\nn = 1\nP = 1 2\n", 2),
])
def test_parse_errors_carry_line(texto, linea):
    with pytest.raises(PatternError) as error:
        parse_pattern(texto)
    assert error.value.line == linea


@pytest.mark.fast
def test_missing_assignment_has_no_line():
    with pytest.raises(PatternError) as error:
        parse_pattern("n = 1\n")
    assert error.value.line is None


@pytest.mark.fast
def test_parse_inline_separators_and_comments():
    decorado = parse_pattern("n = 2; P = 1 3 2 4  # toro\nlabels = flip, id\n")
    assert decorado.pattern.start == (1, 2)
    assert decorado.pattern.end == (3, 4)
    assert decorado.labels == ("flip", "id")


@pytest.mark.fast
def test_labels_default_to_identity():
    assert parse_pattern("n = 2\nP = 1 2 3 4\n").labels == ("id", "id")


@pytest.mark.fast
def test_pattern_text_round_trip(fixtures):
    decorado = parse_pattern((fixtures / "linked_flip.pat").read_text())
    assert parse_pattern(pattern_text(decorado)) == decorado


@pytest.mark.fast
def test_boundary_holonomies_single_edge():
    flip = parse_pattern("n = 1\nP = 1 2\nlabels = flip\n")
    assert boundary_holonomies(flip) == ["flip", "flip"]
    assert not extends_over_caps(flip)
    assert extends_over_caps(flip.untwisted())


@pytest.mark.fast
def test_boundary_words_torus():
    toro = parse_pattern("n = 2\nP = 1 3 2 4\nlabels = flip id\n")
    (palabra,) = boundary_words(toro)
    assert len(palabra.letters) == 4
    assert sorted(palabra.letters) == [(0, -1), (0, 1), (1, -1), (1, 1)]
    # el conmutador torcido tiene holonomía trivial en Z2
    assert palabra.holonomy == "id"


ESPEJO = {
    PairClass.POS_LINKED: PairClass.NEG_LINKED,
    PairClass.POS_NESTED: PairClass.NEG_NESTED,
    PairClass.POS_UNLINKED: PairClass.NEG_UNLINKED,
}
ESPEJO.update({v: k for k, v in ESPEJO.items()})


def _clases_validas(patron, a, b):
    """Clases cuya desigualdad se cumple para las aristas a < b (desde 0)"""
    pi, pi_, pj, pj_ = patron.start[a], patron.end[a], patron.start[b], patron.end[b]
    condiciones = {
        PairClass.POS_LINKED: pi < pj < pi_ < pj_,
        PairClass.NEG_LINKED: pj < pi < pj_ < pi_,
        PairClass.POS_NESTED: pi < pj < pj_ < pi_,
        PairClass.NEG_NESTED: pj < pi < pi_ < pj_,
        PairClass.POS_UNLINKED: pi < pi_ < pj < pj_,
        PairClass.NEG_UNLINKED: pj < pj_ < pi < pi_,
    }
    return [clase for clase, vale in condiciones.items() if vale]


@pytest.mark.fast
@pytest.mark.parametrize("n", [2, 3, 4])
def test_classify_pair_is_total(n):
    for patron in all_patterns(n):
        for i, j, clase in class_table(patron):
            assert _clases_validas(patron, i - 1, j - 1) == [clase]


@pytest.mark.fast
@pytest.mark.parametrize("n", [2, 3, 4])
def test_swapping_edges_mirrors_class(n):
    for patron in all_patterns(n):
        for i, j, clase in class_table(patron):
            permutacion = list(range(n))
            permutacion[i - 1], permutacion[j - 1] = j - 1, i - 1
            assert classify_pair(patron.relabel(permutacion), i, j) == ESPEJO[clase]


@pytest.mark.fast
def test_boundary_holonomies_sphere_with_flip():
    esfera = parse_pattern("n = 2\nP = 1 2 3 4\nlabels = flip id\n")
    assert sorted(boundary_holonomies(esfera)) == ["flip", "flip", "id"]


@pytest.mark.fast
@pytest.mark.parametrize("n", [1, 2, 3])
def test_identity_labels_give_trivial_holonomy(n):
    for patron in all_patterns(n):
        decorado = DecoratedPattern(patron, ("id",) * n)
        assert set(boundary_holonomies(decorado)) == {"id"}
        assert extends_over_caps(decorado)
