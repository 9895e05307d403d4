# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled base-60 magnitude kernels.

Same contract as ``fara._pykernels``: little-endian lists of digits in,
little-endian lists out, high-order zeros allowed in results.
"""

from libc.stdlib cimport malloc, calloc, free

cdef enum:
    BASE = 60


cdef int* _load(list a, Py_ssize_t n) except NULL:
    cdef int* buf = <int*>calloc(n if n > 0 else 1, sizeof(int))
    cdef Py_ssize_t i
    if buf == NULL:
        raise MemoryError()
    for i in range(len(a)):
        buf[i] = a[i]
    return buf


cdef list _dump(int* buf, Py_ssize_t n):
    cdef list out = [0] * n
    cdef Py_ssize_t i
    for i in range(n):
        out[i] = buf[i]
    return out


cdef Py_ssize_t _top(int* buf, Py_ssize_t n):
    while n and buf[n - 1] == 0:
        n -= 1
    return n


cdef int _cmp(int* a, Py_ssize_t la, int* b, Py_ssize_t lb):
    la = _top(a, la)
    lb = _top(b, lb)
    if la != lb:
        return -1 if la < lb else 1
    cdef Py_ssize_t i
    for i in range(la - 1, -1, -1):
        if a[i] != b[i]:
            return -1 if a[i] < b[i] else 1
    return 0


def cmp_mag(list a, list b):
    cdef int* pa = _load(a, len(a))
    cdef int* pb
    try:
        pb = _load(b, len(b))
        try:
            return _cmp(pa, len(a), pb, len(b))
        finally:
            free(pb)
    finally:
        free(pa)


def add_mag(list a, list b):
    if len(a) < len(b):
        a, b = b, a
    cdef Py_ssize_t la = len(a), lb = len(b), i
    cdef int* pa = _load(a, la + 1)
    cdef int carry = 0, s
    try:
        for i in range(la):
            s = pa[i] + carry
            if i < lb:
                s += <int>b[i]
            if s >= BASE:
                pa[i] = s - BASE
                carry = 1
            else:
                pa[i] = s
                carry = 0
        pa[la] = carry
        return _dump(pa, la + 1 if carry else la)
    finally:
        free(pa)


def sub_mag(list a, list b):
    cdef Py_ssize_t la = len(a), lb = len(b), i
    cdef int* pa = _load(a, la)
    cdef int borrow = 0, d
    try:
        for i in range(la):
            d = pa[i] - borrow
            if i < lb:
                d -= <int>b[i]
            if d < 0:
                pa[i] = d + BASE
                borrow = 1
            else:
                pa[i] = d
                borrow = 0
        if borrow:
            raise ValueError("sub_mag: subtrahend exceeds minuend")
        return _dump(pa, la)
    finally:
        free(pa)


def mul_small(list a, m):
    if m < 0:
        raise ValueError("mul_small: negative multiplier")
    if m >= 1 << 40:
        # carries would overflow 64-bit accumulators
        from fara._pykernels import mul_small as slow
        return slow(a, m)
    cdef long long mm = m, carry = 0, t
    cdef Py_ssize_t i
    cdef list out = []
    for i in range(len(a)):
        t = <long long>(<int>a[i]) * mm + carry
        out.append(<int>(t % BASE))
        carry = t // BASE
    while carry:
        out.append(<int>(carry % BASE))
        carry //= BASE
    return out


def mul_mag(list a, list b):
    cdef Py_ssize_t la = len(a), lb = len(b), i, j, k
    if la == 0 or lb == 0:
        return []
    cdef int* pa = _load(a, la)
    cdef int* pb = NULL
    cdef int* acc = NULL
    cdef int ai, carry, t
    try:
        pb = _load(b, lb)
        acc = <int*>calloc(la + lb, sizeof(int))
        if acc == NULL:
            raise MemoryError()
        for i in range(la):
            ai = pa[i]
            if ai == 0:
                continue
            carry = 0
            for j in range(lb):
                t = acc[i + j] + ai * pb[j] + carry
                acc[i + j] = t % BASE
                carry = t // BASE
            k = i + lb
            while carry:
                t = acc[k] + carry
                acc[k] = t % BASE
                carry = t // BASE
                k += 1
        return _dump(acc, la + lb)
    finally:
        free(pa)
        free(pb)
        free(acc)


def divmod_small(list a, d):
    if d <= 0:
        raise ZeroDivisionError("divmod_small: divisor must be positive")
    if d >= 1 << 40:
        from fara._pykernels import divmod_small as slow
        return slow(a, d)
    cdef long long dd = d, r = 0, cur
    cdef Py_ssize_t n = len(a), i
    cdef int* pa = _load(a, n)
    try:
        for i in range(n - 1, -1, -1):
            cur = r * BASE + pa[i]
            pa[i] = <int>(cur // dd)
            r = cur % dd
        return _dump(pa, n), r
    finally:
        free(pa)


cdef void _mul_small_into(int* b, Py_ssize_t lb, int m, int* out):
    # out has room for lb + 1 digits
    cdef int carry = 0, t
    cdef Py_ssize_t i
    for i in range(lb):
        t = b[i] * m + carry
        out[i] = t % BASE
        carry = t // BASE
    out[lb] = carry


def divmod_mag(list a, list b):
    cdef Py_ssize_t la = len(a), lb = len(b), i, j, rl
    cdef int* pb = _load(b, lb)
    cdef int* pa = NULL
    cdef int* q = NULL
    cdef int* rem = NULL
    cdef int* prod = NULL
    cdef int lo, hi, mid, d, borrow
    try:
        lb = _top(pb, lb)
        if lb == 0:
            raise ZeroDivisionError("divmod_mag: zero divisor")
        pa = _load(a, la)
        q = <int*>calloc(la if la else 1, sizeof(int))
        # remainder never exceeds divisor length + 1 digits
        rem = <int*>calloc(lb + 2, sizeof(int))
        prod = <int*>calloc(lb + 2, sizeof(int))
        if q == NULL or rem == NULL or prod == NULL:
            raise MemoryError()
        rl = 0
        for i in range(la - 1, -1, -1):
            for j in range(rl, 0, -1):
                rem[j] = rem[j - 1]
            rem[0] = pa[i]
            rl = _top(rem, rl + 1)
            if _cmp(rem, rl, pb, lb) < 0:
                continue
            lo = 1
            hi = BASE - 1
            while lo < hi:
                mid = (lo + hi + 1) // 2
                _mul_small_into(pb, lb, mid, prod)
                if _cmp(prod, lb + 1, rem, rl) <= 0:
                    lo = mid
                else:
                    hi = mid - 1
            q[i] = lo
            _mul_small_into(pb, lb, lo, prod)
            borrow = 0
            for j in range(rl):
                d = rem[j] - borrow - (prod[j] if j <= lb else 0)
                if d < 0:
                    rem[j] = d + BASE
                    borrow = 1
                else:
                    rem[j] = d
                    borrow = 0
            rl = _top(rem, rl)
        return _dump(q, la), _dump(rem, rl)
    finally:
        free(pb)
        free(pa)
        free(q)
        free(rem)
        free(prod)
