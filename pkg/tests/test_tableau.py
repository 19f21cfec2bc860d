from itertools import product

import pytest

from ribbons import oracle
from ribbons.generator import enumerate_tableaux
from ribbons.shapes import SkewShape, compositions, partitions, subpartitions
from ribbons.strips import make_ribbon
from ribbons.tableau import (
    HeadArray,
    InvalidCoding,
    RibbonTableau,
    decode,
    decode_with_spin,
    encode,
    render_text,
    tableau_spin2,
    tableau_weight,
    validate,
)


def test_decode_straight_example(straight_array):
    t, spin2 = decode_with_spin(straight_array)
    assert t.shape == SkewShape((8, 7, 6, 5, 1))
    assert len(t.ribbons) == 9
    assert tableau_weight(t) == (3, 3, 2, 1)
    assert spin2 == tableau_spin2(t)
    assert encode(t) == straight_array
    assert validate(t)


def test_decode_skew_example(skew_array):
    t, spin2 = decode_with_spin(skew_array)
    assert t.shape == SkewShape((8, 7, 6, 5, 1, 1), (3, 3, 1))
    assert tableau_weight(t) == (2, 2, 2, 1)
    assert tableau_spin2(t) == spin2 == 6
    assert encode(t) == skew_array
    assert validate(t)
    assert encode(decode(skew_array)).rows[0][:3] == (-1, -1, -1)


def test_decode_single_ribbon():
    t = decode(HeadArray(((1, 0, 0),), 3))
    (rb,) = t.ribbons
    assert rb.cells == {(1, 1), (1, 2), (1, 3)} and rb.spin2 == 0 and rb.label == 1


def test_decode_k1_is_young_tableau():
    rows = ((1, 1, 2), (2, 3))
    t = decode(HeadArray(rows, 1))
    assert {rb.head: rb.label for rb in t.ribbons} == {(1, 1): 1, (1, 2): 1, (1, 3): 2, (2, 1): 2, (2, 2): 3}
    assert all(len(rb.cells) == 1 for rb in t.ribbons)
    assert tableau_spin2(t) == 0


def test_encode_examples():
    vertical = RibbonTableau(SkewShape((1, 1, 1)), 3, (make_ribbon({(1, 1), (2, 1), (3, 1)}, 1),))
    # the head is the south-west end, i.e. the bottom cell in top-down order
    assert encode(vertical).rows == ((0,), (0,), (1,))
    empty = RibbonTableau(SkewShape((2, 1), (2, 1)), 3, ())
    assert encode(empty).rows == ((-1, -1), (-1,))
    assert decode(encode(empty)) == empty


@pytest.mark.parametrize("rows, k", [
    (((0, -1, 0),), 1),             # -1 not left-justified
    (((0, 0), (-1,)), 1),           # -1 region not a partition
    (((2, 0, 0),), 3),              # label 1 missing
    (((1, 0),), 3),                 # 2 cells for a 3-ribbon
    (((0, 1, 0),), 3),              # head not at the frontier
    (((1, 1), (0, 0)), 2),          # two heads in one row, strip fails
    (((2,), (1,)), 1),              # column not increasing
    (((1, 2), (1, 2)), 1),
])
def test_invalid_codings(rows, k):
    with pytest.raises(InvalidCoding):
        decode(HeadArray(rows, k))


def test_text_and_json_round_trip(skew_array):
    assert HeadArray.from_json(skew_array.to_json()) == skew_array
    assert HeadArray.from_text(skew_array.to_text("bottom-up"), 3, "bottom-up") == skew_array
    assert HeadArray.from_text(skew_array.to_text(), 3) == skew_array
    assert skew_array.to_text("bottom-up").splitlines()[0] == "1"


def test_tableau_json_round_trip(skew_array):
    t = decode(skew_array)
    assert RibbonTableau.from_json(t.to_json()) == t


def _swap(t, a, b):
    swap = {a: b, b: a}
    return RibbonTableau(t.shape, t.k, tuple(rb.with_label(swap.get(rb.label, rb.label)) for rb in t.ribbons))


def test_validate_rejects_swapped_labels(skew_array):
    bad = _swap(decode(skew_array), 1, 4)
    diag = validate(bad)
    assert not diag
    assert diag.label == len(tableau_weight(bad))


def test_validate_other_failures(skew_array):
    t = decode(skew_array)
    assert validate(RibbonTableau(t.shape, t.k, t.ribbons[1:])).reason.startswith("ribbons do not tile")
    one = RibbonTableau(SkewShape((3,)), 3, (make_ribbon({(1, 1), (1, 2), (1, 3)}, 1),))
    assert validate(one)
    wrong_k = RibbonTableau(SkewShape((3,)), 2, one.ribbons)
    assert not validate(wrong_k)


def test_spin_and_weight():
    row = decode(HeadArray(((1, 0, 0, 2, 0, 0),), 3))
    assert tableau_spin2(row) == 0 and tableau_weight(row) == (1, 1)
    col = decode(HeadArray(((0,), (0,), (0,), (1,)), 4))
    assert tableau_spin2(col) == 3


def test_render_single_ribbon():
    t = decode(HeadArray(((1, 0, 0),), 3))
    assert render_text(t) == "+-----------+\n| 1   1   1 |\n+-----------+"
    assert render_text(RibbonTableau(SkewShape((1,), (1,)), 1, ())) == ""


def test_render_skew_example(skew_array):
    t = decode(skew_array)
    text = render_text(t)
    label_lines = text.splitlines()[1::2]
    assert len(label_lines) == 6
    assert label_lines[0].split() == [".", ".", ".", "|", "1", "1", "|", "3", "3", "3", "|"]
    assert render_text(t, "bottom-up").splitlines() == text.splitlines()[::-1]
    assert render_text(t) == render_text(decode(skew_array))


def test_round_trips_on_generated_tableaux():
    count = 0
    for n in range(10):
        for lam in partitions(n):
            for mu in subpartitions(lam):
                shape = SkewShape(lam, mu)
                for k in (2, 3):
                    if len(shape) % k:
                        continue
                    for w in compositions(len(shape) // k):
                        for array, spin2 in enumerate_tableaux(shape, k, w):
                            t, s2 = decode_with_spin(array)
                            assert s2 == spin2 == tableau_spin2(t)
                            assert encode(t) == array
                            assert decode(encode(t)) == t
                            assert validate(t)
                            count += 1
    assert count > 1000


def _is_ssyt(rows):
    for i, row in enumerate(rows):
        if any(a > b for a, b in zip(row, row[1:])):
            return False
        if i and any(rows[i - 1][j] >= x for j, x in enumerate(row) if rows[i - 1][j] > 0 and x > 0):
            return False
    return True


def test_k1_decode_accepts_exactly_ssyt():
    for n in range(1, 7):
        for lam in partitions(n):
            for mu in subpartitions(lam):
                cells = SkewShape(lam, mu).cells()
                if not cells:
                    continue
                for filling in product(range(1, 4), repeat=len(cells)):
                    if set(filling) != set(range(1, max(filling) + 1)):
                        continue
                    rows = [[-1] * r for r in lam]
                    for (r, c), x in zip(cells, filling):
                        rows[r - 1][c - 1] = x
                    array = HeadArray(tuple(map(tuple, rows)), 1)
                    try:
                        decode(array)
                        accepted = True
                    except InvalidCoding:
                        accepted = False
                    assert accepted == _is_ssyt(rows), rows


def test_validate_matches_oracle_on_all_labellings():
    """validate (chain of strips) accepts exactly the brute-force tableaux."""
    for k, max_cells in ((1, 5), (2, 9), (3, 9)):
        for n in range(max_cells + 1):
            for lam in partitions(n):
                for mu in subpartitions(lam):
                    shape = SkewShape(lam, mu)
                    if len(shape) % k:
                        continue
                    r = len(shape) // k
                    expected = set()
                    for w in compositions(r):
                        expected |= {b.ribbons for b in oracle.brute_tableaux(shape, k, w)}
                    for tiling in oracle.brute_tilings(shape, k):
                        ribbons = sorted(tiling, key=sorted)
                        for labels in product(range(1, r + 1), repeat=r):
                            if set(labels) != set(range(1, max(labels, default=0) + 1)):
                                continue
                            t = RibbonTableau(shape, k, tuple(make_ribbon(rb, lab) for rb, lab in zip(ribbons, labels)))
                            key = tuple(sorted((lab, tuple(sorted(rb))) for rb, lab in zip(ribbons, labels)))
                            assert bool(validate(t)) == (key in expected), (shape, k, key)
