def normal_form(rel, sequence):
    """
    Lexicographically least sequence reachable from `sequence` by swapping
    adjacent independent events. Greedy: repeatedly take the smallest event
    that commutes with everything before it.

    A plain bubble pass that only swaps out-of-order adjacent pairs is not
    enough: with x < a < b, x dependent on b and a independent of both,
    "b x a" is a fixpoint of the bubble pass while "a b x" is reachable.
    """
    rest = list(sequence)
    result = []
    while rest:
        best = None
        for i, event in enumerate(rest):
            if all(rel.independent(earlier, event) for earlier in rest[:i]):
                if best is None or event < rest[best]:
                    best = i
        result.append(rest.pop(best))
    return tuple(result)


def equivalent(rel, r1, r2):
    r1, r2 = tuple(r1), tuple(r2)
    if r1 == r2:
        return True
    if len(r1) != len(r2) or sorted(r1) != sorted(r2):
        return False
    return normal_form(rel, r1) == normal_form(rel, r2)
