"""Reference implementations that share no code with the package.

Everything here is written directly in sympy, so a bug in the package's
own field arithmetic cannot hide behind an identical bug in the oracle.
"""

from __future__ import annotations

import sympy as sp

a, e = sp.symbols("alpha eps")


def to_sympy(x):
    """Package scalar -> sympy expression (via its canonical literal)."""
    s = str(x)
    if s.endswith("i"):
        head = s[:-1]
        # split 're+im' / 're-im' at the last sign that is not leading
        k = max(head.rfind("+", 1), head.rfind("-", 1))
        if k <= 0:
            return sp.I * sp.Rational(head or "1")
        return sp.Rational(head[:k]) + sp.I * sp.Rational(head[k:])
    return sp.sympify(s.replace("^", "**"), locals={"alpha": a, "eps": e})


def vae(alpha, eps, m, n):
    return (alpha + n + alpha * eps * m) * (1 + eps * n) / (1 + eps * (m + n))


def vbk(beta, k, m, n):
    if m + n + k != 0:
        return sp.Integer(n + k)
    return (n + k) * (beta - n - k) / (beta - k)


def left_symmetry(f, m, n, l):
    return (n - m) * f(m + n, l) - f(n, l) * f(m, n + l) + f(m, l) * f(n, m + l)


def omega_closed(eps, m, n):
    if m + n != 0:
        return sp.Integer(0)
    return (n**3 - n - (eps - 1 / eps) * n**2) / 24


def is_zero(expr) -> bool:
    return sp.simplify(sp.expand(expr)) == 0
