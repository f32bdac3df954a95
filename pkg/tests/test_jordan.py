import random
from collections import Counter

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from planeform.arith import NUMERIC, I, exact
from planeform.errors import ArgumentError, IrreducibleError, ParseError, SpectrumError
from planeform.jordan import (
    JordanForm,
    WeyrArray,
    aff,
    aff_of_jordan,
    format_jordan,
    format_weyr,
    g_matrix,
    invariant_subspaces,
    jordan_of_plane,
    jordan_of_weyr,
    multiplicity_table,
    parse_jordan,
    parse_weyr,
    permutation_decompose,
    similar,
    weyr_of_general,
    weyr_of_jordan,
    weyr_of_plane,
)
from planeform.linalg import Matrix, conjugate_by, direct_sum, krylov_rank
from planeform.partition import Partition, stack_decomposition
from planeform.plane import memberships, plane_matrix, plane_matrix_from_roots

from generators import RUNNING, jordan_forms, partitions, pool_values, random_jordan, random_unimodular

ONE_, TWO = exact(1), exact(2)
FIG2 = JordanForm.from_blocks([(ONE_, 1, 1), (TWO, 1, 3), (ONE_, 2, 2)])


def running():
    return plane_matrix(Partition((3, 3, 2)), [[-2, 3], [1]])


def to_sympy(m: Matrix) -> sympy.Matrix:
    def conv(x):
        return (sympy.Rational(int(x.re.numerator), int(x.re.denominator))
                + sympy.I * sympy.Rational(int(x.im.numerator), int(x.im.denominator)))
    return sympy.Matrix([[conv(x) for x in r] for r in m.rows])


def sympy_block_multiset(m: Matrix) -> Counter:
    """Jordan blocks of ``m`` computed independently with sympy: (eigenvalue, size) counts."""
    _, j = to_sympy(m).jordan_form()
    n, blocks, start = j.rows, Counter(), 0
    while start < n:
        end = start + 1
        while end < n and j[end - 1, end] == 1:  # sympy puts ones above the diagonal
            end += 1
        lam = sympy.nsimplify(j[start, start])
        blocks[(complex(lam), end - start)] += 1
        start = end
    return blocks


def block_multiset(jf: JordanForm) -> Counter:
    return Counter({(complex(lam), size): c for lam, size, c in jf.blocks})


class TestTypes:
    def test_jordan_form_merges_and_sorts(self):
        jf = JordanForm.from_blocks([(TWO, 1), (ONE_, 2), (TWO, 1), (ONE_, 1), (TWO, 1), (ONE_, 2)])
        assert jf == FIG2
        assert jf.n == 8
        assert jf.spectrum().entries == ((ONE_, 5), (TWO, 3))
        with pytest.raises(ArgumentError):
            JordanForm(((ONE_, 0, 1),))

    def test_materialize(self):
        m = JordanForm.from_blocks([(TWO, 2), (ONE_, 1)]).materialize()
        assert m == Matrix([[1, 0, 0], [0, 2, 0], [0, 1, 2]])

    def test_weyr_rejects_increasing(self):
        with pytest.raises(ArgumentError):
            WeyrArray(((ONE_, (1, 2)),))


class TestText:
    def test_format_running_example(self):
        assert format_jordan(FIG2) == "1*J1(1)+3*J1(2)+2*J2(1)"
        assert format_weyr(weyr_of_jordan(FIG2)) == "1:(3,2)\n2:(3)"

    def test_parse_forms(self):
        assert parse_jordan("J1(1)+3J1(2)+2J2(1)") == FIG2
        assert parse_jordan("1*J1(1) + 3*J1(2) + 2*J2(1)") == FIG2
        assert parse_jordan("J2(1/2-3i)") == JordanForm.from_blocks([(exact(1) / 2 - 3 * I, 2)])
        with pytest.raises(ParseError):
            parse_jordan("K1(1)")
        assert parse_weyr("1:(3,2)\n2:(3)") == weyr_of_jordan(FIG2)
        with pytest.raises(ParseError):
            parse_weyr("1:3,2")

    @given(jordan_forms())
    def test_round_trip(self, jf):
        assert parse_jordan(format_jordan(jf)) == jf
        w = weyr_of_jordan(jf)
        assert parse_weyr(format_weyr(w)) == w


class TestJordanWeyr:
    def test_worked_weyr_example(self):
        lam = I
        jf = JordanForm.from_blocks([(lam, 1, 2), (lam, 3), (lam, 4)])
        assert weyr_of_jordan(jf)[lam] == (4, 2, 2, 1)
        assert jordan_of_weyr(WeyrArray(((lam, (4, 2, 2, 1)),))) == jf

    def test_trivial_cases(self):
        assert weyr_of_jordan(JordanForm.from_blocks([(ONE_, 1)]))[ONE_] == (1,)
        assert jordan_of_weyr(WeyrArray(((ONE_, (1, 1, 1)),))) == JordanForm.from_blocks([(ONE_, 3)])

    def test_running_example(self):
        w = weyr_of_jordan(FIG2)
        assert w.as_dict() == {ONE_: (3, 2), TWO: (3,)}
        assert jordan_of_weyr(w) == FIG2

    @given(jordan_forms(max_n=8))
    def test_inverse_maps(self, jf):
        w = weyr_of_jordan(jf)
        assert w.n == jf.n
        assert jordan_of_weyr(w) == jf


class TestPlaneToJordan:
    def test_multiplicity_table(self):
        t = multiplicity_table(running())
        assert (t.multiplicity(ONE_, 0), t.multiplicity(TWO, 0), t.multiplicity(ONE_, 1)) == (1, 1, 1)
        assert (t.alpha(ONE_, 1), t.alpha(TWO, 1)) == (2, 1)
        t = multiplicity_table(plane_matrix(Partition((1, 1)), [[-1, 2]]))
        assert t.multiplicity(ONE_, 0) == 2 and t.alpha(ONE_, 0) == 2

    def test_g_matrices(self):
        a = running()
        assert g_matrix(a, 0) == Matrix([[0, -2], [1, 3]])
        assert g_matrix(a, 1) == Matrix([[0, -2, 0], [1, 3, 0], [0, 1, 1]])
        assert g_matrix(plane_matrix(Partition((4,)), [[exact(5)]]), 0) == Matrix([[5]])
        with pytest.raises(ArgumentError):
            g_matrix(a, 2)

    def test_invariant_subspaces(self):
        assert invariant_subspaces(running()) == [(0, 3), (1, 4, 6), (2, 5, 7)]
        assert invariant_subspaces(plane_matrix(Partition((3,)), [[exact(2)]])) == [(0,), (1,), (2,)]
        comps = invariant_subspaces(plane_matrix(Partition((2, 2, 1)), [[3, -1], [I]]))
        assert [len(c) for c in comps] == [2, 3]

    def test_permutation_decompose(self):
        perm, permuted = permutation_decompose(running())
        g1 = Matrix([[0, -2], [1, 3]])
        g2 = Matrix([[0, -2, 0], [1, 3, 0], [0, 1, 1]])
        assert permuted == direct_sum(g1, g2, g2)
        assert sorted(perm) == list(range(8))
        a = plane_matrix(Partition((4,)), [[I]])
        assert permutation_decompose(a) == ([0, 1, 2, 3], a.matrix)
        b = plane_matrix(Partition((1, 1, 1)), [[1, 2, 3]])
        assert permutation_decompose(b) == ([0, 1, 2], b.matrix)

    def test_jordan_of_running_example(self):
        assert jordan_of_plane(running()) == FIG2

    def test_scalar_plane(self):
        a = exact(-3) + I
        jf = jordan_of_plane(plane_matrix(Partition((5,)), [[a]]))
        assert jf == JordanForm.from_blocks([(a, 1, 5)])

    def test_triple_root_equal_to_coefficient(self):
        a = exact(2)
        plane = plane_matrix_from_roots(Partition((2, 1, 1, 1)), [[a], [a, a, a]])
        assert jordan_of_plane(plane) == JordanForm.from_blocks([(a, 1), (a, 4)])

    def test_weyr_of_plane(self):
        assert weyr_of_plane(running()).as_dict() == {ONE_: (3, 2), TWO: (3,)}
        assert weyr_of_plane(plane_matrix(Partition((3,)), [[I]])).as_dict() == {I: (3,)}
        lam1, lam2 = exact(5), exact(-1)
        plane = plane_matrix_from_roots(Partition((2, 2, 1)), [[lam1, lam2], [lam1]])
        assert weyr_of_plane(plane).as_dict() == {lam1: (2, 1), lam2: (2,)}

    @settings(max_examples=60, deadline=None)
    @given(partitions(max_n=7), st.data())
    def test_structure_checks_hold(self, pi, data):
        roots = [data.draw(st.lists(pool_values, min_size=l, max_size=l))
                 for l in stack_decomposition(pi).l]
        a = plane_matrix_from_roots(pi, roots)
        stacks = stack_decomposition(pi)
        perm, permuted = permutation_decompose(a)  # raises if the direct sum is wrong
        for j in range(stacks.t):
            g = g_matrix(a, j)
            e1 = [1] + [0] * (g.n - 1)
            assert krylov_rank(g, [exact(x) for x in e1]) == stacks.s[j]
        assert weyr_of_plane(a) == weyr_of_jordan(jordan_of_plane(a))

    @settings(max_examples=25, deadline=None)
    @given(partitions(max_n=5), st.data())
    def test_jordan_of_plane_matches_sympy(self, pi, data):
        roots = [data.draw(st.lists(pool_values, min_size=l, max_size=l))
                 for l in stack_decomposition(pi).l]
        a = plane_matrix_from_roots(pi, roots)
        assert block_multiset(jordan_of_plane(a)) == sympy_block_multiset(a.matrix)

    def test_numeric_mode(self):
        jf = jordan_of_plane(plane_matrix(Partition((3, 3, 2)), [[-2, 3], [1]], NUMERIC))
        assert jf.same_as(FIG2, 1e-9)


class TestGeneral:
    def test_weyr_small(self):
        assert weyr_of_general(Matrix([[1, 1], [0, 1]])).as_dict() == {ONE_: (1, 1)}
        a = exact(7)
        assert weyr_of_general(Matrix.identity(3).scale(a)).as_dict() == {a: (3,)}

    def test_weyr_conjugated_running_example(self):
        q, q_inv = random_unimodular(random.Random(11), 8)
        b = conjugate_by(Matrix(RUNNING), q, q_inv)
        assert weyr_of_general(b).as_dict() == {ONE_: (3, 2), TWO: (3,)}

    def test_supplied_spectrum(self):
        b = Matrix(RUNNING)
        assert weyr_of_general(b, [1, 1, 1, 1, 1, 2, 2, 2]).as_dict() == {ONE_: (3, 2), TWO: (3,)}
        assert weyr_of_general(b, FIG2) == weyr_of_jordan(FIG2)
        with pytest.raises(SpectrumError):
            weyr_of_general(b, [1] * 8)
        with pytest.raises(SpectrumError):
            weyr_of_general(b, [1, 1])

    def test_irrational_spectrum(self):
        b = Matrix([[0, 2], [1, 0]])
        with pytest.raises(IrreducibleError):
            weyr_of_general(b)
        w = weyr_of_general(b, mode=NUMERIC)
        assert sorted(seq for _, seq in w.items()) == [(1,), (1,)]

    def test_numeric_defective(self):
        w = weyr_of_general(Matrix(RUNNING).to_mode(NUMERIC), [1, 1, 1, 1, 1, 2, 2, 2])
        assert w.same_as(weyr_of_jordan(FIG2))

    def test_aff_examples(self):
        assert aff(FIG2.materialize()) == running()
        a = exact(4)
        scalar = Matrix.identity(3).scale(a)
        assert aff(scalar).matrix == scalar and aff(scalar).partition == Partition((3,))
        j2 = JordanForm.from_blocks([(ONE_, 2)]).materialize()
        assert aff(j2).matrix == Matrix([[0, -1], [1, 2]])
        assert aff_of_jordan(FIG2) == running()

    def test_similar_examples(self):
        a, b = exact(2), I
        assert similar(Matrix([[a, 0], [0, b]]), Matrix([[b, 0], [0, a]]))
        assert not similar(JordanForm.from_blocks([(exact(0), 2)]).materialize(), Matrix.zeros(2))
        assert similar(Matrix(RUNNING), FIG2.materialize())
        assert not similar(Matrix.zeros(2), Matrix.zeros(3))

    @settings(max_examples=40, deadline=None)
    @given(jordan_forms(), st.randoms(use_true_random=False))
    def test_aff_completeness(self, jf, rng):
        q, q_inv = random_unimodular(rng, jf.n)
        b = conjugate_by(jf.materialize(), q, q_inv)
        rep = aff(b, eigenvalues=jf)
        assert len(memberships(rep.matrix)) == 1
        assert similar(b, rep.matrix)
        assert weyr_of_general(b) == weyr_of_general(jf.materialize())

    @settings(max_examples=60, deadline=None)
    @given(jordan_forms())
    def test_round_trips(self, jf):
        a = aff(jf.materialize())
        assert jordan_of_plane(a) == jf
        assert aff(jordan_of_plane(a).materialize()) == a

    def test_random_jordan_generator(self):
        rng = random.Random(0)
        for _ in range(20):
            n = rng.randint(1, 6)
            assert random_jordan(rng, n).n == n
