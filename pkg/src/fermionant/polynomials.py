"""Exact integer polynomials: univariate and bivariate.

UniPolynomial stores coefficients by ascending degree with no trailing
zeros; the zero polynomial has an empty coefficient tuple and degree -1
(sentinel).  BivarPolynomial stores a map from (x_degree, y_degree) to a
nonzero coefficient.  Equality is coefficient-wise and exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class UniPolynomial:
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        c = tuple(self.coeffs)
        while c and c[-1] == 0:
            c = c[:-1]
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def zero(cls) -> "UniPolynomial":
        return cls(())

    @classmethod
    def constant(cls, value: int) -> "UniPolynomial":
        return cls((value,))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "UniPolynomial":
        return cls((0,) * degree + (coeff,))

    @property
    def degree(self) -> int:
        """Degree, or -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coefficient(self, degree: int) -> int:
        if 0 <= degree < len(self.coeffs):
            return self.coeffs[degree]
        return 0

    def __add__(self, other: "UniPolynomial") -> "UniPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return UniPolynomial(tuple(out))

    def __mul__(self, other: "UniPolynomial") -> "UniPolynomial":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPolynomial(())
        out = [0] * (len(a) + len(b) - 1)
        for i, u in enumerate(a):
            if u:
                for j, v in enumerate(b):
                    out[i + j] += u * v
        return UniPolynomial(tuple(out))

    def shift(self, degrees: int) -> "UniPolynomial":
        """Multiply by z^degrees."""
        if not self.coeffs:
            return self
        return UniPolynomial((0,) * degrees + self.coeffs)

    def __call__(self, z: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def to_json(self) -> list[str]:
        """Coefficient array by ascending degree, decimal strings."""
        return [str(c) for c in self.coeffs]

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for d in range(self.degree, -1, -1):
            c = self.coefficient(d)
            if c == 0:
                continue
            mon = "" if d == 0 else ("z" if d == 1 else f"z^{d}")
            if d > 0 and c == 1:
                terms.append(mon)
            elif d > 0 and c == -1:
                terms.append("-" + mon)
            else:
                terms.append(f"{c}{mon}")
        out = terms[0]
        for t in terms[1:]:
            out += " - " + t[1:] if t.startswith("-") else " + " + t
        return out


@dataclass(frozen=True)
class BivarPolynomial:
    coeffs: dict[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "coeffs", {k: v for k, v in self.coeffs.items() if v != 0}
        )

    @classmethod
    def zero(cls) -> "BivarPolynomial":
        return cls({})

    @classmethod
    def monomial(cls, x_deg: int, y_deg: int, coeff: int = 1) -> "BivarPolynomial":
        return cls({(x_deg, y_deg): coeff})

    def coefficient(self, x_deg: int, y_deg: int) -> int:
        return self.coeffs.get((x_deg, y_deg), 0)

    def __add__(self, other: "BivarPolynomial") -> "BivarPolynomial":
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return BivarPolynomial(out)

    def __mul__(self, other: "BivarPolynomial") -> "BivarPolynomial":
        out: dict[tuple[int, int], int] = {}
        for (i, j), u in self.coeffs.items():
            for (a, b), v in other.coeffs.items():
                k = (i + a, j + b)
                out[k] = out.get(k, 0) + u * v
        return BivarPolynomial(out)

    def __call__(self, x: int, y: int) -> int:
        return sum(c * x**i * y**j for (i, j), c in self.coeffs.items())

    def substitute_diagonal(self, sub: UniPolynomial) -> UniPolynomial:
        """Evaluate with x = y = sub(z), yielding a univariate polynomial.

        Used to form T(G; z+1, z+1) from the two-variable Tutte polynomial.
        """
        powers: dict[int, UniPolynomial] = {0: UniPolynomial.constant(1)}

        def power(e: int) -> UniPolynomial:
            if e not in powers:
                powers[e] = power(e - 1) * sub
            return powers[e]

        acc = UniPolynomial.zero()
        for (i, j), c in sorted(self.coeffs.items()):
            acc = acc + power(i + j) * UniPolynomial.constant(c)
        return acc

    def to_json(self) -> dict[str, str]:
        """Map "x_deg,y_deg" -> decimal-string coefficient, keys sorted."""
        return {f"{i},{j}": str(c) for (i, j), c in sorted(self.coeffs.items())}

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for (i, j), c in sorted(self.coeffs.items(), reverse=True):
            mon = ("" if i == 0 else ("x" if i == 1 else f"x^{i}")) + (
                "" if j == 0 else ("y" if j == 1 else f"y^{j}")
            )
            if mon and c == 1:
                terms.append(mon)
            elif mon and c == -1:
                terms.append("-" + mon)
            else:
                terms.append(f"{c}{mon}")
        out = terms[0]
        for t in terms[1:]:
            out += " - " + t[1:] if t.startswith("-") else " + " + t
        return out
