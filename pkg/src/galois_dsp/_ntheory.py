"""Small integer number-theory helpers shared by the field modules."""

from functools import lru_cache


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorisation of ``n >= 1`` as ``((prime, exponent), ...)``."""
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def prime_factors(n: int) -> list[int]:
    return [q for q, _ in factorize(n)]


def divisors(n: int) -> list[int]:
    divs = [1]
    for q, e in factorize(n):
        divs = [d * q**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def element_order(x, group_order: int, power, one) -> int:
    """Order of ``x`` in a cyclic group of size ``group_order``.

    ``power(x, e)`` must compute ``x**e`` in the group; ``one`` is the
    identity. Starts from the group order and strips prime factors.
    """
    order = group_order
    for q, e in factorize(group_order):
        for _ in range(e):
            if power(x, order // q) == one:
                order //= q
            else:
                break
    return order


def is_generator(x, group_order: int, power, one) -> bool:
    return all(power(x, group_order // q) != one for q in prime_factors(group_order))
