"""Independent recomputation of the frozen example values with sympy.

Each block builds the algebra from its defining formulas, not from the C++
code, and asserts the value the C++ tests expect.
"""

import itertools

import sympy as sp

R = sp.Rational


def jordan(x, y):
    return (x * y + y * x) / 2


def tr(x, y):
    return (x * y).trace()


def spin_checks():
    # F1 + V, V = Q^2 with the identity form; element = (s, x1, x2)
    def mul(p, q):
        return sp.Matrix([p[0] * q[0] + p[1] * q[1] + p[2] * q[2],
                          p[0] * q[1] + q[0] * p[1],
                          p[0] * q[2] + q[0] * p[2]])

    def form(p, q):
        return 2 * (p[0] * q[0] + p[1] * q[1] + p[2] * q[2])

    one = sp.Matrix([1, 0, 0])
    u = sp.Matrix([0, 1, 0])
    v = sp.Matrix([0, 0, 1])
    a = (one + u) / 2
    b = (one + v) / 2
    alpha = form(a, b)
    assert alpha == R(1, 2)
    x = (2 * mul(a, b) - alpha * a - b) / (alpha - 1)
    assert x == (one - u) / 2
    # word a*b: axis = scale * (ab + correction)
    scale = 2 / (alpha - 1)
    correction = -(alpha * a + b) / 2
    assert scale == -4 and scale * (mul(a, b) + correction) == x
    # triple with c = (1 + (3u + 4v)/5)/2
    c = (one + (3 * u + 4 * v) / 5) / 2
    assert mul(c, c) == c
    gamma, beta, phi = form(a, c), form(b, c), form(mul(a, b), c)
    xc = (2 * mul(a, c) - gamma * a - c) / (gamma - 1)
    lhs = form(x, xc)
    rhs = (-alpha * gamma - beta + 2 * phi) / (-alpha * gamma + alpha + gamma - 1)
    assert sp.simplify(lhs - rhs) == 0


def matsuo_s3_checks():
    # basis a=(12), b=(13), c=(23); |xy| = 3 for distinct pairs; eta = 1/2
    names = ["a", "b", "c"]
    third = {("a", "b"): "c", ("a", "c"): "b", ("b", "c"): "a"}
    e = {n: sp.Matrix([1 if m == n else 0 for m in names]) for n in names}

    def mul(p, q):
        out = sp.zeros(3, 1)
        for i, s in enumerate(names):
            for j, t in enumerate(names):
                if p[i] == 0 or q[j] == 0:
                    continue
                if s == t:
                    prod = e[s]
                else:
                    k = third[tuple(sorted((s, t)))]
                    prod = R(1, 4) * (e[s] + e[t] - e[k])
                out += p[i] * q[j] * prod
        return out

    gram = sp.Matrix(3, 3, lambda i, j: 1 if i == j else R(1, 4))

    def form(p, q):
        return (p.T * gram * q)[0]

    a, b, c = e["a"], e["b"], e["c"]
    unit = R(2, 3) * (a + b + c)
    for x in (a, b, c):
        assert mul(unit, x) == x
    xab = (2 * mul(a, b) - R(1, 4) * a - b) / (R(1, 4) - 1)
    xac = (2 * mul(a, c) - R(1, 4) * a - c) / (R(1, 4) - 1)
    assert xab == (2 * b + 2 * c - a) / 3 and xab == xac
    assert form(mul(a, b), c) == R(-1, 8)
    assert form(xab, xac) == 1
    # capacity: a + x_a(b) is the unit
    assert a + xab == unit


def two_gen_checks():
    al = sp.symbols("alpha")
    pi = (al - 1) / 2
    gram = sp.Matrix([[1, al, pi], [al, 1, pi], [pi, pi, 2 * pi ** 2]])
    det = sp.factor(gram.det())
    assert sp.simplify(det - al * (1 - al) ** 3 / 2) == 0
    assert gram.det().subs(al, R(1, 2)) == R(1, 32)
    assert gram.det().subs(al, 0) == 0
    assert pi.subs(al, R(1, 4)) == R(-3, 8)
    assert (1 / pi).subs(al, R(1, 2)) == -4


def matrix_checks():
    e11 = sp.Matrix([[1, 0], [0, 0]])
    assert tr(e11, sp.Matrix([[1, 1], [0, 0]])) == 1
    basis = [sp.Matrix([[1, 0], [0, 0]]), sp.Matrix([[-1, 1], [-2, 2]]),
             sp.Matrix([[-1, 2], [-1, 2]]), sp.Matrix([[0, 0], [0, 1]])]
    for m in basis:
        assert m * m == m and m.rank() == 1
    values = {tr(p, q) for p, q in itertools.combinations(basis, 2)}
    assert values == {-1, 0, 2}
    # propagation example in M_3: q = e33, a = e11, b = -e11+e12-2e21+2e22
    z = sp.zeros(3, 3)
    a = z.copy(); a[0, 0] = 1
    q = z.copy(); q[2, 2] = 1
    b = sp.Matrix([[-1, 1, 0], [-2, 2, 0], [0, 0, 0]])
    alpha = tr(a, b)
    x = (2 * jordan(a, b) - alpha * a - b) / (alpha - 1)
    e22 = z.copy(); e22[1, 1] = 1
    assert x == e22
    assert jordan(q, a) == z and jordan(q, x) == z and jordan(q, b) == z
    # H_3': a12 = (e1-e2)(e1-e2)^T/2, a13 likewise
    v12 = sp.Matrix([1, -1, 0])
    v13 = sp.Matrix([1, 0, -1])
    a12, a13 = v12 * v12.T / 2, v13 * v13.T / 2
    assert a12 * a12 == a12 and tr(a12, a13) == R(1, 4)


if __name__ == "__main__":
    spin_checks()
    matsuo_s3_checks()
    two_gen_checks()
    matrix_checks()
    print("derived values confirmed")
