import random
from fractions import Fraction

import pytest

from absarith.smith import (
    cokernel_divisors,
    elementary_divisors,
    group_divisors_from_table,
    invariant_factors_of_presentation,
    kernel_divisors,
    smith_normal_form,
)


def _matmul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]


def _det(m):
    m = [[Fraction(x) for x in row] for row in m]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(col + 1, n):
            factor = m[r][col]
            if factor:
                m[r] = [x - factor * y for x, y in zip(m[r], m[col])]
    return det


def test_smith_normal_form_random():
    rng = random.Random(61)
    for _ in range(60):
        m, n = rng.randint(1, 5), rng.randint(1, 5)
        a = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(m)]
        d, u, v = smith_normal_form(a)
        assert _matmul(_matmul(u, a), v) == d
        assert abs(_det(u)) == 1 and abs(_det(v)) == 1
        diag = [d[i][i] for i in range(min(m, n))]
        for i in range(len(diag) - 1):
            if diag[i + 1] != 0:
                assert diag[i] != 0 and diag[i + 1] % diag[i] == 0
        for i in range(m):
            for j in range(n):
                if i != j:
                    assert d[i][j] == 0


def test_invariant_factors():
    assert invariant_factors_of_presentation([[2, 0], [0, 4]], 2) == [2, 4]
    assert invariant_factors_of_presentation([[2, 0], [0, 3]], 2) == [6]
    with pytest.raises(ValueError):
        invariant_factors_of_presentation([[2, 0]], 2)  # infinite quotient


def test_elementary_divisors():
    assert elementary_divisors([6]) == [2, 3]
    assert elementary_divisors([2, 4]) == [2, 4]
    assert elementary_divisors([12, 2]) == [2, 3, 4]


def test_cokernel_examples():
    # Z/2 -> Z/4, x -> 2x: cokernel Z/2
    assert cokernel_divisors((4,), ((2,),)) == [2]
    # zero map into Z/6: cokernel Z/6 = C2 x C3
    assert cokernel_divisors((6,), ((0,),)) == [2, 3]
    # surjection Z/4 -> Z/4
    assert cokernel_divisors((4,), ((1,),)) == []


def test_kernel_examples():
    assert kernel_divisors((2,), (4,), ((2,),)) == []
    assert kernel_divisors((2,), (2,), ((0,),)) == [2]
    # Z/4 -> Z/2 reduction: kernel 2Z/4Z = Z/2
    assert kernel_divisors((4,), (2,), ((1,),)) == [2]
    # kernel into the trivial codomain is everything
    assert kernel_divisors((4, 3), (), ()) == [3, 4]


def test_kernel_cokernel_sizes_random():
    from helpers import random_abelian_group, random_hom

    rng = random.Random(63)
    for _ in range(40):
        a = random_abelian_group(rng, 16)
        b = random_abelian_group(rng, 16)
        hom = random_hom(rng, a, b)
        ker = kernel_divisors(a.orders, b.orders, hom.matrix)
        cok = cokernel_divisors(b.orders, hom.matrix)
        # brute-force the sizes
        kernel_size = sum(1 for x in a.elements() if hom.apply(x) == b.zero())
        image_size = len({hom.apply(x) for x in a.elements()})
        prod = lambda xs: __import__("math").prod(xs)
        assert prod(ker) == kernel_size
        assert prod(cok) == b.order // image_size
        # brute-force the kernel's structure from its table
        kernel_elements = [x for x in a.elements() if hom.apply(x) == b.zero()]
        assert group_divisors_from_table(kernel_elements, a.add, a.zero()) == ker


def test_group_divisors_from_table():
    z6 = [(i,) for i in range(6)]
    add6 = lambda x, y: ((x[0] + y[0]) % 6,)
    assert group_divisors_from_table(z6, add6, (0,)) == [2, 3]
    klein = [(i, j) for i in range(2) for j in range(2)]
    addk = lambda x, y: ((x[0] + y[0]) % 2, (x[1] + y[1]) % 2)
    assert group_divisors_from_table(klein, addk, (0, 0)) == [2, 2]
    assert group_divisors_from_table([(0,)], lambda x, y: (0,), (0,)) == []
    with pytest.raises(ValueError):
        group_divisors_from_table([(1,)], add6, (0,))  # zero missing
