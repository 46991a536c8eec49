"""Exact special numbers: binomials, Stirling numbers of the second kind,
Bernoulli numbers and Bell polynomials.

All values are Python integers or ``fractions.Fraction`` (always in lowest
terms with a positive denominator), so nothing here ever rounds.
"""

import threading
from collections import Counter
from fractions import Fraction
from math import comb, factorial
from typing import List, Optional, Tuple, Union

from utils.exceptions import DomainError

BigRational = Fraction
RationalLike = Union[int, Fraction]


def _check_non_negative(name: str, value: int) -> None:
    if not isinstance(value, int) or isinstance(value, bool):
        raise DomainError(f"{name} must be an integer, got {value!r}")
    if value < 0:
        raise DomainError(f"{name} must be non-negative, got {value}")


def binomial(n: int, k: int) -> int:
    """C(n, k), zero outside 0 <= k <= n"""
    _check_non_negative("n", n)
    if k < 0 or k > n:
        return 0
    return comb(n, k)


class StirlingTriangle:
    """Cached triangle of Stirling numbers of the second kind.

    Rows are built with the recurrence {n+1, k} = k{n, k} + {n, k-1} and kept
    for the lifetime of the process; the lock makes concurrent growth safe.
    """

    def __init__(self):
        self._rows: List[Tuple[int, ...]] = [(1,)]
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._rows)

    def row(self, n: int) -> Tuple[int, ...]:
        """Row n as the tuple ({n,0}, ..., {n,n})"""
        _check_non_negative("n", n)
        if n >= len(self._rows):
            with self._lock:
                while len(self._rows) <= n:
                    prev = self._rows[-1]
                    m = len(prev)
                    nxt = [0] * (m + 1)
                    for k in range(1, m + 1):
                        above = prev[k] if k < m else 0
                        nxt[k] = k * above + prev[k - 1]
                    self._rows.append(tuple(nxt))
        return self._rows[n]

    def clear(self) -> None:
        with self._lock:
            del self._rows[1:]


_triangle = StirlingTriangle()


def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind {n brace k}"""
    _check_non_negative("n", n)
    if k < 0 or k > n:
        return 0
    return _triangle.row(n)[k]


def stirling2_row(n: int) -> Tuple[int, ...]:
    return _triangle.row(n)


def stirling2_explicit(n: int, k: int, form: str = "forward") -> int:
    """{n brace k} from the explicit alternating sum.

    ``forward``   (1/k!) sum_j (-1)^(k-j) C(k,j) j^n
    ``reflected`` (1/k!) sum_j (-1)^j C(k,j) (k-j)^n
    """
    _check_non_negative("n", n)
    if k < 0 or k > n:
        return 0
    if form == "forward":
        total = sum((-1) ** (k - j) * comb(k, j) * j**n for j in range(k + 1))
    elif form == "reflected":
        total = sum((-1) ** j * comb(k, j) * (k - j) ** n for j in range(k + 1))
    else:
        raise DomainError(f"unknown explicit form {form!r}")
    quotient, remainder = divmod(total, factorial(k))
    # the alternating sum is always a multiple of k!
    assert remainder == 0
    return quotient


def _restricted_growth_block_counts(n: int):
    """Yield the number of blocks of every set partition of {1..n}.

    Walks restricted growth strings a[0..n-1] (a[0] = 0, a[i] <= 1 + max a[:i]),
    one per set partition.
    """
    if n == 0:
        yield 0
        return
    a = [0] * n
    prefix_max = [0] * n
    while True:
        yield max(prefix_max[-1], a[-1]) + 1
        i = n - 1
        while i > 0 and a[i] == prefix_max[i] + 1:
            i -= 1
        if i == 0:
            return
        a[i] += 1
        top = max(prefix_max[i], a[i])
        for j in range(i + 1, n):
            a[j] = 0
            prefix_max[j] = top


def set_partition_count(n: int, k: Optional[int] = None) -> int:
    """Brute-force count of partitions of an n-set (into exactly k blocks if given)"""
    _check_non_negative("n", n)
    counts = Counter(_restricted_growth_block_counts(n))
    if k is None:
        return sum(counts.values())
    return counts.get(k, 0)


class _BernoulliCache:
    """B_0..B_m computed with sum_{j=0}^{m} C(m+1, j) B_j = 0, B_1 = -1/2"""

    def __init__(self):
        self._values: List[Fraction] = [Fraction(1), Fraction(-1, 2)]
        self._lock = threading.Lock()

    def upto(self, n: int) -> List[Fraction]:
        if n >= len(self._values):
            with self._lock:
                values = self._values
                while len(values) <= n:
                    m = len(values)
                    if m % 2 == 1:
                        values.append(Fraction(0))
                        continue
                    # odd indices >= 3 contribute nothing
                    s = Fraction(1) - Fraction(m + 1, 2)
                    for j in range(2, m, 2):
                        s += comb(m + 1, j) * values[j]
                    values.append(-s / (m + 1))
        return self._values

    def clear(self) -> None:
        with self._lock:
            del self._values[2:]


_bernoulli = _BernoulliCache()


def bernoulli(n: int) -> Fraction:
    """Bernoulli number B_n with z/(e^z - 1) = sum B_n z^n/n!"""
    _check_non_negative("n", n)
    return _bernoulli.upto(n)[n]


def bernoulli_numbers(n: int) -> List[Fraction]:
    """[B_0, ..., B_n]"""
    _check_non_negative("n", n)
    return list(_bernoulli.upto(n)[: n + 1])


def bell_polynomial_eval(n: int, x: RationalLike) -> Fraction:
    """Bell polynomial sum_{k=1..n} {n brace k} x^k; B_0(x) is taken as 1"""
    _check_non_negative("n", n)
    x = Fraction(x)
    if n == 0:
        return Fraction(1)
    row = _triangle.row(n)
    acc = Fraction(0)
    for k in range(n, 0, -1):
        acc = acc * x + row[k]
    return acc * x


def stirling_egf_partial_sum(k: int, w: float, terms: int = 40) -> float:
    """Truncated sum_{n=k..terms} {n brace k} w^n / n!, the series of (e^w - 1)^k / k!"""
    _check_non_negative("k", k)
    total = 0.0
    for n in range(k, terms + 1):
        total += float(Fraction(stirling2(n, k), factorial(n))) * w**n
    return total


def clear_caches() -> None:
    """Drop memoized Stirling rows and Bernoulli numbers"""
    _triangle.clear()
    _bernoulli.clear()
