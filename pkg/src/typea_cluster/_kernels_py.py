"""Pure-Python brute-force subset scans (fallback for the compiled kernel).

Both functions walk every subset of a bit universe; they are the exhaustive
oracles behind the ``brute_force`` enumeration methods.
"""


def maximal_independent_masks(conflicts, allowed):
    """Masks S ⊆ ``allowed`` with no conflicting pair inside S and no
    element of ``allowed`` outside S that could be added.

    ``conflicts[b]`` is the bitmask of elements conflicting with ``b``.
    """
    bits = [b for b in range(len(conflicts)) if allowed >> b & 1]
    out = []
    s = allowed
    while True:
        ok = True
        for b in bits:
            if s >> b & 1:
                if conflicts[b] & s:
                    ok = False
                    break
            elif not conflicts[b] & s:
                ok = False
                break
        if ok:
            out.append(s)
        if s == 0:
            break
        s = (s - 1) & allowed
    out.sort()
    return out


def exact_one_masks(cycles, nbits):
    """Masks S ⊆ [0, nbits) meeting every cycle mask in exactly one bit."""
    out = []
    for s in range(1 << nbits):
        for c in cycles:
            x = s & c
            if x == 0 or x & (x - 1):
                break
        else:
            out.append(s)
    return out
