from math import gcd


def coprime_pairs(max_n, min_n=2):
    """All (n, q) with min_n <= n <= max_n, 0 < q < n, gcd = 1."""
    return [
        (n, q)
        for n in range(min_n, max_n + 1)
        for q in range(1, n)
        if gcd(n, q) == 1
    ]
