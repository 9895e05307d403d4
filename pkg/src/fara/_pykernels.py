"""Pure-Python base-60 magnitude kernels.

Every function works on little-endian lists of base-60 digits (index 0 is
the least significant place).  Results may carry high-order zero digits;
callers normalise.  ``_ckernels`` implements the same functions in Cython.
"""

BASE = 60


def cmp_mag(a, b):
    """Compare two magnitudes; returns -1, 0 or 1."""
    la = len(a)
    lb = len(b)
    while la and a[la - 1] == 0:
        la -= 1
    while lb and b[lb - 1] == 0:
        lb -= 1
    if la != lb:
        return -1 if la < lb else 1
    for i in range(la - 1, -1, -1):
        if a[i] != b[i]:
            return -1 if a[i] < b[i] else 1
    return 0


def add_mag(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = []
    carry = 0
    lb = len(b)
    for i in range(len(a)):
        s = a[i] + carry
        if i < lb:
            s += b[i]
        if s >= BASE:
            out.append(s - BASE)
            carry = 1
        else:
            out.append(s)
            carry = 0
    if carry:
        out.append(carry)
    return out


def sub_mag(a, b):
    """``a - b`` for magnitudes with ``a >= b``."""
    out = []
    borrow = 0
    lb = len(b)
    for i in range(len(a)):
        d = a[i] - borrow
        if i < lb:
            d -= b[i]
        if d < 0:
            out.append(d + BASE)
            borrow = 1
        else:
            out.append(d)
            borrow = 0
    if borrow:
        raise ValueError("sub_mag: subtrahend exceeds minuend")
    return out


def mul_small(a, m):
    """Multiply a magnitude by a non-negative machine integer."""
    if m < 0:
        raise ValueError("mul_small: negative multiplier")
    out = []
    carry = 0
    for d in a:
        t = d * m + carry
        out.append(t % BASE)
        carry = t // BASE
    while carry:
        out.append(carry % BASE)
        carry //= BASE
    return out


def mul_mag(a, b):
    la = len(a)
    lb = len(b)
    if la == 0 or lb == 0:
        return []
    acc = [0] * (la + lb)
    for i in range(la):
        ai = a[i]
        if ai == 0:
            continue
        carry = 0
        for j in range(lb):
            t = acc[i + j] + ai * b[j] + carry
            acc[i + j] = t % BASE
            carry = t // BASE
        k = i + lb
        while carry:
            t = acc[k] + carry
            acc[k] = t % BASE
            carry = t // BASE
            k += 1
    return acc


def divmod_small(a, d):
    """Short division by a positive machine integer: ``(quotient, remainder)``."""
    if d <= 0:
        raise ZeroDivisionError("divmod_small: divisor must be positive")
    q = [0] * len(a)
    r = 0
    for i in range(len(a) - 1, -1, -1):
        cur = r * BASE + a[i]
        q[i] = cur // d
        r = cur % d
    return q, r


def divmod_mag(a, b):
    """Schoolbook long division of magnitudes: ``(quotient, remainder)``.

    Each quotient digit is found by bisection over 0..59 against the running
    remainder, so the routine never leaves base 60.
    """
    lb = len(b)
    while lb and b[lb - 1] == 0:
        lb -= 1
    if lb == 0:
        raise ZeroDivisionError("divmod_mag: zero divisor")
    b = list(b[:lb])
    q = [0] * len(a)
    rem = []
    for i in range(len(a) - 1, -1, -1):
        # rem = rem * 60 + a[i]
        rem.insert(0, a[i])
        if cmp_mag(rem, b) < 0:
            continue
        lo, hi = 1, BASE - 1
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if cmp_mag(mul_small(b, mid), rem) <= 0:
                lo = mid
            else:
                hi = mid - 1
        q[i] = lo
        rem = sub_mag(rem, mul_small(b, lo))
        while rem and rem[-1] == 0:
            rem.pop()
    return q, rem
