import itertools
import random

import pytest

from agcauchy import (
    GroebnerBasis,
    Status,
    bms,
    buchberger,
    complete_syndromes,
    decode,
    delta_set,
    error_patterns,
    gt,
    known_syndromes,
    locate_errors,
    solve_error_values,
    validated_radius,
    vanishing_ideal,
)
from agcauchy.agcode import SyndromeArray
from agcauchy.decoder import _discrepancy, bms_run
from agcauchy.errors import EmptySyndromes, Inconsistent, InitialDataOutsideZ, LengthMismatch


def berlekamp_massey(F, s):
    """Classical connection polynomial C (low-to-high) with C(0) = 1."""
    C, B = [1], [1]
    L, m, b = 0, 1, 1
    for n in range(len(s)):
        d = s[n]
        for i in range(1, L + 1):
            d = F.add(d, F.mul(C[i], s[n - i]))
        if d == 0:
            m += 1
            continue
        coef = F.div(d, b)
        T = list(C)
        C = C + [0] * max(0, len(B) + m - len(C))
        for i, x in enumerate(B):
            C[i + m] = F.sub(C[i + m], F.mul(coef, x))
        if 2 * L <= n:
            L, B, b, m = n + 1 - L, T, d, 1
        else:
            m += 1
    return C[: L + 1] + [0] * max(0, L + 1 - len(C)), L


def test_bms_single_error_line(line7):
    e = [0] * 7
    e[5] = 2
    G = bms(known_syndromes(e, line7), line7.order)
    assert [g.to_text() for g in G] == ["X1 + 2"]  # X - 5 over GF(7)


def test_bms_matches_classical_bm(line7):
    F = line7.field
    for t in (1, 2):
        for e in error_patterns(7, 7, t):
            syn = known_syndromes(e, line7)
            (f,) = bms(syn, line7.order).polys
            C, L = berlekamp_massey(F, [syn[(k,)] for k in range(4)])
            assert L == t == f.LE[0]
            # the annihilator is the reversed connection polynomial
            assert all(f.coeff((L - i,)) == c for i, c in enumerate(C))


def test_bms_oracle_equivalence_within_radius(line7, herm4):
    for code, top in ((line7, 2), (herm4, 1)):
        for t in range(1, top + 1):
            for e in error_patterns(code.n, code.field.q, t):
                G = bms(known_syndromes(e, code), code.order)
                supp = [code.points[j] for j, v in enumerate(e) if v]
                ref = vanishing_ideal(code.ring, supp)
                assert G.same_ideal(ref)
                assert delta_set(G) == delta_set(ref)


def test_bms_state_invariants(herm4):
    rng = random.Random(5)
    F = herm4.field
    region = herm4.zero_region
    for _ in range(20):
        e = [0] * 8
        for j in rng.sample(range(8), rng.randint(1, 3)):
            e[j] = rng.randrange(1, 4)
        full = known_syndromes(e, herm4)
        previous = frozenset()
        for k in range(1, len(region) + 1):
            syn = SyndromeArray(F, herm4.order, region[:k], {a: full[a] for a in region[:k]})
            state = bms_run(syn)
            stairs = state.staircase.points
            assert previous <= stairs
            previous = stairs
            for f in state.minimal:
                for u in state.processed:
                    if all(x >= y for x, y in zip(u, f.LE)):
                        assert _discrepancy(f, full.values, u) == 0


def test_zero_syndromes_and_empty():
    from agcauchy import GF, MonomialOrder

    F = GF(4)
    order = MonomialOrder((2, 3))
    syn = SyndromeArray(F, order, order.initial_segment(5), {a: 0 for a in order.initial_segment(5)})
    assert bms(syn).is_unit()
    with pytest.raises(EmptySyndromes):
        bms(SyndromeArray(F, order, [], {}))


def test_locate_errors(herm4):
    G = vanishing_ideal(herm4.ring, [herm4.points[3], herm4.points[7]])
    assert locate_errors(G, herm4) == [3, 7]
    unit = buchberger([herm4.ring.const(1)], herm4.ring)
    assert locate_errors(unit, herm4) == []


@pytest.mark.parametrize("name", ["line7", "herm4"])
def test_complete_syndromes_matches_gt(name, request):
    code = request.getfixturevalue(name)
    F = code.field
    box = tuple(b + 2 for b in code.zero_box)
    rng = random.Random(2)
    for t in (1, 2):
        for _ in range(15):
            e = [0] * code.n
            for j in rng.sample(range(code.n), t):
                e[j] = rng.randrange(1, F.q)
            syn = known_syndromes(e, code)
            G = vanishing_ideal(code.ring, [code.points[j] for j, v in enumerate(e) if v])
            if any(d not in syn.values for d in delta_set(G).points):
                continue
            E = complete_syndromes(G, syn, box)
            assert E == gt(e, code, box)
            assert all(E[a] == v for a, v in syn.values.items())


def test_weight_one_array_is_geometric(herm4):
    F = herm4.field
    e = [0] * 8
    e[6] = 3
    syn = known_syndromes(e, herm4)
    G = bms(syn, herm4.order)
    E = complete_syndromes(G, syn, (5, 5))
    x, y = herm4.points[6]
    for a, b in E.indices():
        assert E[a, b] == F.mul(3, F.mul(F.pow(x, a), F.pow(y, b)))


def test_complete_syndromes_edges(herm4):
    syn = known_syndromes([0] * 8, herm4)
    unit = buchberger([herm4.ring.const(1)], herm4.ring)
    assert complete_syndromes(unit, syn, (3, 3)).is_zero()
    far = vanishing_ideal(herm4.ring, herm4.points[:4])
    if not delta_set(far).points <= set(syn.values):
        with pytest.raises(InitialDataOutsideZ):
            complete_syndromes(far, syn, (3, 3))
    G = buchberger([herm4.ring.parse("X1^5"), herm4.ring.parse("X2")], herm4.ring)
    with pytest.raises(InitialDataOutsideZ):
        complete_syndromes(G, syn, (3, 3))


def test_solve_error_values(line7):
    F = line7.field
    e = [0, 0, 4, 0, 0, 6, 0]
    E = gt(e, line7, (3,))
    assert solve_error_values([2, 5], E, line7) == e
    one = [0] * 7
    one[1] = 5
    assert solve_error_values([1], gt(one, line7, (0,)), line7) == one
    E.coeffs[3] = F.add(int(E.coeffs[3]), 1)
    with pytest.raises(Inconsistent):
        solve_error_values([2, 5], E, line7)


def test_decode_codeword_and_errors(line7, herm4):
    rng = random.Random(0)
    for code in (line7, herm4):
        c = code.encode([rng.randrange(code.field.q) for _ in range(code.dimension)])
        res = decode(c, code)
        assert res.status is Status.SUCCESS and res.codeword == c and not any(res.error)
        with pytest.raises(LengthMismatch):
            decode(c[:-1], code)


def test_decode_soundness_on_random_words(line7, herm4):
    """SUCCESS always means a verified codeword within the radius of w."""
    rng = random.Random(17)
    for code in (line7, herm4):
        F = code.field
        seen = set()
        for _ in range(400):
            w = [rng.randrange(F.q) for _ in range(code.n)]
            res = decode(w, code)
            seen.add(res.status)
            if res.status is Status.SUCCESS:
                assert code.is_codeword(res.codeword)
                assert [F.add(c, x) for c, x in zip(res.codeword, res.error)] == w
                assert sum(1 for x in res.error if x) <= code.radius
                assert known_syndromes(res.error, code).values == known_syndromes(w, code).values
        assert len(seen) > 1


def test_result_json(herm4):
    e = [0] * 8
    e[2] = 1
    res = decode(e, herm4)
    obj = res.to_json()
    assert obj["status"] == "SUCCESS"
    assert obj["error_positions"] == [2] and obj["error_values"] == [1]
    assert obj["codeword"] == [0] * 8
    assert len(obj["locator_basis"]) == 2


def test_validated_radius(line7, herm4):
    assert validated_radius(line7) == 2
    assert validated_radius(herm4) == 1
