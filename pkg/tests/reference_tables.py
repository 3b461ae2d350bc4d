"""Published type tables for degrees 4 to 9, with a support expander.

Equations use the usual shorthand: ``a`` and ``b{i,j}`` are coefficients,
``L{i}`` is a generic binary form of degree i in X and Y, and factored
terms like ``X^2(Z^4 + Y^3Z)`` expand by distributing.  A few printed
monomials have impossible degrees; they are corrected here to the monomial
named by the coefficient index, b{i,j} standing for X^(d-i) Y^j Z^(i-j).
"""

import re

TABLES = {
    4: [
        ("12,(3,4)", "X^4 + Y^4 + a XZ^3"),
        ("9,(1,6)", "X^4 + Y^3Z + a XZ^3"),
        ("8,(1,5)", "X^4 + Y^3Z + a YZ^3"),
        ("7,(1,5)", "X^3Y + Y^3Z + a Z^3X"),
        ("6,(2,3)", "X^4 + Z^4 + a XY^3 + b{2,2} X^2Z^2"),
        ("4,(1,2)", "X^4 + Y^4 + Z^4 + b{2,0} X^2Z^2 + b{3,2} XY^2Z"),
        ("4,(0,1)", "Z^4 + L{4}"),
        ("3,(1,2)", "X^4 + X(Z^3 + a Y^3) + b{2,1} X^2YZ + b{4,2} Y^2Z^2"),
        ("3,(0,1)", "Z^3 L{1} + L{4}"),
        ("2,(0,1)", "Z^4 + Z^2 L{2} + L{4}"),
    ],
    5: [
        ("20,(4,5)", "X^5 + Y^5 + a XZ^4"),
        ("16,(1,12)", "X^5 + Y^4Z + a XZ^4"),
        ("15,(1,11)", "X^5 + Y^4Z + a YZ^4"),
        ("13,(1,10)", "X^4Y + Y^4Z + a Z^4X"),
        ("10,(2,5)", "X^5 + Y^5 + a XZ^4 + b{2,0} X^3Z^2"),
        ("8,(1,4)", "X^5 + Y^4Z + a XZ^4 + b{2,0} X^3Z^2"),
        ("5,(1,2)", "X^5 + Y^5 + Z^5 + b{3,1} X^2YZ^2 + b{4,3} XY^3Z"),
        ("5,(0,1)", "Z^5 + L{5}"),
        ("4,(1,2)", "X^5 + X(Z^4 + a Y^4) + b{2,0} X^3Z^2 + b{3,2} X^2Y^2Z + b{5,2} Y^2Z^3"),
        ("4,(0,1)", "Z^4 L{1} + L{5}"),
        ("3,(1,2)", "X^5 + Y^4Z + a YZ^4 + b{2,1} X^3YZ + X^2(b{3,0} Z^3 + b{3,3} Y^3) + b{4,2} XY^2Z^2"),
        ("2,(0,1)", "Z^4 L{1} + Z^2 L{3} + L{5}"),
    ],
    6: [
        ("30,(5,6)", "X^6 + Y^6 + a XZ^5"),
        ("25,(1,20)", "X^6 + Y^5Z + a XZ^5"),
        ("24,(1,19)", "X^6 + Y^5Z + a YZ^5"),
        ("21,(1,17)", "X^5Y + Y^5Z + a XZ^5"),
        ("15,(5,3)", "X^6 + Y^6 + a XZ^5 + b{3,3} X^3Y^3"),
        # printed Y^3Z^5
        ("12,(1,7)", "X^6 + Y^5Z + a YZ^5 + b{6,3} Y^3Z^3"),
        ("10,(5,2)", "X^6 + Y^6 + a XZ^5 + b{2,2} X^4Y^2 + b{4,4} X^2Y^4"),
        ("8,(1,3)", "X^6 + Y^5Z + a YZ^5 + b{4,2} X^2Y^2Z^2"),
        ("6,(1,2)", "X^6 + Y^6 + Z^6 + b{3,0} X^3Z^3 + b{4,2} X^2Y^2Z^2 + b{5,4} XY^4Z"),
        ("6,(1,3)", "X^6 + Y^6 + Z^6 + b{2,0} X^4Z^2 + b{6,3} Y^3Z^3 + X^2(b{4,0} Z^4 + b{4,3} Y^3Z)"),
        ("6,(0,1)", "Z^6 + L{6}"),
        ("5,(4,3)", "X^6 + XZ^5 + a XY^5 + b{3,1} X^3YZ^2 + b{4,3} X^2Y^3Z + b{6,2} Y^2Z^4"),
        ("5,(4,1)", "X^6 + XZ^5 + a XY^5 + b{2,1} X^4YZ + b{4,2} X^2Y^2Z^2 + b{6,3} Y^3Z^3"),
        ("5,(0,1)", "Z^5 L{1} + L{6}"),
        # printed Y^3Z^5
        ("4,(1,3)", "X^6 + Y^5Z + a YZ^5 + b{6,3} Y^3Z^3 + b{2,1} X^4YZ + X^2(b{4,0} Z^4 + b{4,2} Y^2Z^2 + b{4,4} Y^4)"),
        ("3,(0,1)", "Z^6 + Z^3 L{3} + L{6}"),
        ("2,(0,1)", "Z^6 + Z^4 L{2} + Z^2 L{4} + L{6}"),
    ],
    7: [
        ("42,(6,7)", "X^7 + Y^7 + a XZ^6"),
        ("36,(1,30)", "X^7 + Y^6Z + a XZ^6"),
        ("35,(1,29)", "X^7 + Y^6Z + a YZ^6"),
        ("31,(1,26)", "X^6Y + Y^6Z + a XZ^6"),
        ("21,(3,7)", "X^7 + Y^7 + a XZ^6 + b{3,0} X^4Z^3"),
        ("18,(1,12)", "X^7 + Y^6Z + a XZ^6 + b{3,0} X^4Z^3"),
        ("14,(2,7)", "X^7 + Y^7 + a XZ^6 + b{2,0} X^5Z^2 + b{4,0} X^3Z^4"),
        ("12,(1,6)", "X^7 + Y^6Z + a XZ^6 + b{2,0} X^5Z^2 + b{4,0} X^3Z^4"),
        ("9,(1,3)", "X^7 + Y^6Z + a XZ^6 + b{3,0} X^4Z^3 + b{5,3} X^2Y^3Z^2"),
        ("7,(1,2)", "X^7 + Y^7 + Z^7 + b{4,1} X^3YZ^3 + b{5,3} X^2Y^3Z^2 + b{6,5} XY^5Z"),
        ("7,(1,3)", "X^7 + Y^7 + Z^7 + b{3,1} X^4YZ^2 + b{5,4} X^2Y^4Z + b{6,2} XY^2Z^4"),
        ("7,(0,1)", "Z^7 + L{7}"),
        ("6,(5,4)", "X^7 + XZ^6 + a XY^6 + b{3,0} X^4Z^3 + b{4,2} X^3Y^2Z^2 + b{5,4} X^2Y^4Z + b{7,2} Y^2Z^5"),
        (
            "6,(4,3)",
            "X^7 + XZ^6 + a XY^6 + b{2,0} X^5Z^2 + b{3,3} X^4Y^3 + b{4,0} X^3Z^4 + X^2 b{5,3} Y^3Z^2 + b{7,3} Y^3Z^4",
        ),
        ("6,(0,1)", "Z^6 L{1} + L{7}"),
        (
            "5,(1,4)",
            "X^7 + Y^6Z + a YZ^6 + b{2,1} X^5YZ + b{4,2} X^3Y^2Z^2 + b{6,3} XY^3Z^3 + X^2(b{5,0} Z^5 + b{5,5} Y^5)",
        ),
        (
            "4,(1,2)",
            "X^7 + Y^6Z + a XZ^6 + b{2,0} X^5Z^2 + b{3,2} X^4Y^2Z + b{5,2} X^2Y^2Z^3 + b{6,4} XY^4Z^2"
            " + b{7,2} Y^2Z^5 + X^3(b{4,0} Z^4 + b{4,4} Y^4)",
        ),
        (
            "3,(1,2)",
            "X^7 + XZ^6 + a XY^6 + b{2,1} X^5YZ + b{4,2} X^3Y^2Z^2 + b{6,3} XY^3Z^3 + b{7,2} Y^2Z^5"
            " + b{7,5} Y^5Z^2 + X^4 b{3,0}(Z^3 + b{3,3} Y^3) + X^2(b{5,1} YZ^4 + b{5,4} Y^4Z)",
        ),
        ("3,(0,1)", "Z^6 L{1} + Z^3 L{4} + L{7}"),
        ("2,(0,1)", "Z^6 L{1} + Z^4 L{3} + Z^2 L{5} + L{7}"),
    ],
    8: [
        ("56,(7,8)", "X^8 + Y^8 + a XZ^7"),
        ("49,(1,42)", "X^8 + Y^7Z + a XZ^7"),
        ("48,(1,41)", "X^8 + Y^7Z + a YZ^7"),
        ("43,(1,37)", "X^7Y + Y^7Z + a XZ^7"),
        ("28,(7,4)", "X^8 + Y^8 + a XZ^7 + b{4,4} X^4Y^4"),
        # printed Y^4Z^7
        ("24,(1,17)", "X^8 + Y^7Z + a YZ^7 + b{8,4} Y^4Z^4"),
        # printed Y^5Z^7 and Y^3Z^7
        ("16,(1,9)", "X^8 + Y^7Z + a YZ^7 + b{8,5} Y^5Z^3 + b{8,3} Y^3Z^5"),
        ("14,(7,2)", "X^8 + Y^8 + a XZ^7 + b{2,2} X^6Y^2 + b{4,4} X^4Y^4 + b{6,6} X^2Y^6"),
        ("12,(1,5)", "X^8 + Y^7Z + a YZ^7 + b{8,4} Y^4Z^4 + b{4,2} X^4Y^2Z^2"),
        ("8,(1,2)", "X^8 + Y^8 + Z^8 + b{4,0} X^4Z^4 + b{5,2} X^3Y^2Z^3 + b{6,4} X^2Y^4Z^2 + b{7,6} XY^6Z"),
        ("8,(1,3)", "X^8 + Y^8 + Z^8 + b{4,2} X^4Y^2Z^2 + b{8,4} Y^4Z^4 + X^2(b{6,1} YZ^5 + b{6,5} Y^5Z)"),
        (
            "8,(1,4)",
            "X^8 + Y^8 + Z^8 + b{2,0} X^6Z^2 + b{4,0} X^4Z^4 + b{5,4} X^3Y^4Z + b{6,0} X^2Z^6 + b{7,4} XY^4Z^3",
        ),
        ("8,(0,1)", "Z^8 + L{8}"),
        ("7,(6,5)", "X^8 + XZ^7 + a XY^7 + b{4,1} X^4YZ^3 + b{5,3} X^3Y^3Z^2 + b{6,5} X^2Y^5Z + b{8,2} Y^2Z^6"),
        # the printed row is truncated and its label does not match its monomials
        ("7,(6,1)", "X^8 + XZ^7 + a XY^7 + b{3,1} X^5YZ^2 + b{5,4} X^3Y^4Z + b{6,2} X^2Y^2Z^4 + b{8,5} Y^5Z^3"),
        ("7,(0,1)", "Z^7 L{1} + L{8}"),
        (
            "6,(1,5)",
            "X^8 + Y^7Z + a YZ^7 + b{2,1} X^6YZ + b{4,2} X^4Y^2Z^2 + b{8,4} Y^4Z^4"
            " + X^2(b{6,0} Z^6 + b{6,3} Y^3Z^3 + b{6,6} Y^6)",
        ),
        ("4,(0,1)", "Z^8 + Z^4 L{4} + L{8}"),
        (
            "3,(1,2)",
            "X^8 + Y^7Z + a YZ^7 + b{8,4} Y^4Z^4 + b{2,1} X^6YZ + b{4,2} X^4Y^2Z^2 + X^5(b{3,0} Z^3 + b{3,3} Y^3)"
            " + X^3(b{5,1} YZ^4 + b{5,4} Y^4Z) + X^2(b{6,0} Z^6 + b{6,3} Y^3Z^3 + b{6,6} Y^6)"
            " + X(b{7,2} Y^2Z^5 + b{7,5} Y^5Z^2)",
        ),
        ("2,(0,1)", "Z^8 + Z^6 L{2} + Z^4 L{4} + Z^2 L{6} + L{8}"),
    ],
    9: [
        ("72,(8,9)", "X^9 + Y^9 + a XZ^8"),
        ("64,(1,56)", "X^9 + Y^8Z + a XZ^8"),
        ("63,(1,55)", "X^9 + Y^8Z + a YZ^8"),
        ("57,(1,50)", "X^8Y + Y^8Z + a XZ^8"),
        ("36,(4,9)", "X^9 + Y^9 + a XZ^8 + b{4,0} X^5Z^4"),
        ("32,(1,24)", "X^9 + Y^8Z + a XZ^8 + b{4,0} X^5Z^4"),
        ("24,(8,3)", "X^9 + Y^9 + a XZ^8 + b{3,3} X^6Y^3 + b{6,6} X^3Y^6"),
        ("21,(1,13)", "X^9 + Y^8Z + a YZ^8 + b{6,3} X^3Y^3Z^3"),
        ("18,(2,9)", "X^9 + Y^9 + a XZ^8 + b{2,0} X^7Z^2 + b{4,0} X^5Z^4 + b{6,0} X^3Z^6"),
        ("16,(1,8)", "X^9 + Y^8Z + a XZ^8 + b{2,0} X^7Z^2 + b{4,0} X^5Z^4 + b{6,0} X^3Z^6"),
        (
            "12,(4,3)",
            "X^9 + Y^9 + a XZ^8 + b{3,3} X^6Y^3 + b{4,0} X^5Z^4 + b{6,6} X^3Y^6 + b{7,3} X^2Y^3Z^4",
        ),
        ("9,(1,2)", "X^9 + Y^9 + Z^9 + b{5,1} X^4YZ^4 + b{6,3} X^3Y^3Z^3 + b{7,5} X^2Y^5Z^2 + b{8,7} XY^7Z"),
        (
            "9,(1,3)",
            "X^9 + Y^9 + Z^9 + b{3,0} X^6Z^3 + b{5,3} X^4Y^3Z^2 + b{6,0} X^3Z^6 + b{7,6} X^2Y^6Z + b{8,3} XY^3Z^5",
        ),
        ("9,(0,1)", "Z^9 + L{9}"),
        (
            "8,(7,6)",
            "X^9 + XZ^8 + a XY^8 + b{4,0} X^5Z^4 + b{5,2} X^4Y^2Z^3 + b{6,4} X^3Y^4Z^2 + b{7,6} X^2Y^6Z"
            " + b{9,2} Y^2Z^7",
        ),
        (
            "8,(7,4)",
            "X^9 + XZ^8 + a XY^8 + b{2,0} X^7Z^2 + b{4,0} X^5Z^4 + b{5,4} X^4Y^4Z + b{6,0} X^3Z^6"
            " + b{7,4} X^2Y^4Z^3 + b{9,4} Y^4Z^5",
        ),
        (
            "8,(7,2)",
            "X^9 + XZ^8 + a XY^8 + b{3,2} X^6Y^2Z + b{4,0} X^5Z^4 + b{6,4} X^3Y^4Z^2 + b{7,2} X^2Y^2Z^5"
            " + b{9,6} Y^6Z^3",
        ),
        ("8,(0,1)", "Z^8 L{1} + L{9}"),
        (
            "7,(1,6)",
            "X^9 + Y^8Z + a YZ^8 + b{2,1} X^7YZ + b{4,2} X^5Y^2Z^2 + b{6,3} X^3Y^3Z^3 + b{8,4} XY^4Z^4"
            " + X^2 b{7,0}(Z^7 + b{7,7} Y^7)",
        ),
        # printed b{7,3} Y^3Z^6 (index b{9,3}) and b{8,6} Y^6Z^2 (monomial XY^6Z^2)
        (
            "6,(2,3)",
            "X^9 + Y^9 + a XZ^8 + b{2,0} X^7Z^2 + b{3,3} X^6Y^3 + b{4,0} X^5Z^4 + b{5,3} X^4Y^3Z^2"
            " + b{7,3} X^2Y^3Z^4 + b{9,3} Y^3Z^6 + b{8,6} XY^6Z^2 + X^3(b{6,0} Z^6 + b{6,6} Y^6)",
        ),
        (
            "4,(3,2)",
            "X^9 + XZ^8 + a XY^8 + b{2,0} X^7Z^2 + b{3,2} X^6Y^2Z + b{5,2} X^4Y^2Z^3 + b{8,4} XY^4Z^4"
            " + b{9,2} Y^2Z^7 + b{9,6} Y^6Z^3 + X^5(b{4,0} Z^4 + b{4,4} Y^4) + X^3(b{6,0} Z^6 + b{6,4} Y^4Z^2)"
            " + X^2(b{7,2} Y^2Z^5 + b{7,6} Y^6Z)",
        ),
        ("4,(0,1)", "Z^8 L{1} + Z^4 L{5} + L{9}"),
        ("3,(0,1)", "Z^9 + Z^6 L{3} + Z^3 L{6} + L{9}"),
        ("2,(0,1)", "Z^8 L{1} + Z^6 L{3} + Z^4 L{5} + Z^2 L{7} + L{9}"),
    ],
}

# The unfiltered quintic table also lists the type whose members are all reducible.
QUINTIC_REDUCIBLE_ROW = ("4,(1,3)", "X^5 + X(Z^4 + a Y^4 + b{4,2} Y^2Z^2) + b{2,1} X^3YZ")

# The d = 8 row printed as 7,(6,1): its monomials are invariant under 7,(1,3).
D8_CORRUPT_ROW = "7,(6,1)"

_TOKEN = re.compile(r"\s*(?:(L)\{(\d+)\}|([XYZ])(?:\^(\d+))?|(b)\{\d+,\d+\}|(a)\b|([+()]))")


def _tokens(text):
    pos, out = 0, []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"cannot read {text[pos:]!r}")
        pos = m.end()
        if m.group(1):
            out.append(("L", int(m.group(2))))
        elif m.group(3):
            out.append(("var", m.group(3), int(m.group(4) or 1)))
        elif m.group(5) or m.group(6):
            continue  # coefficients do not change the support
        else:
            out.append((m.group(7),))
    return out


def _mono(var, k):
    e = [0, 0, 0]
    e["XYZ".index(var)] = k
    return {tuple(e)}


def _product(a, b):
    return {tuple(x + y for x, y in zip(u, v)) for u in a for v in b}


def expand(text):
    """Support of a shorthand equation as a set of (i, j, k) exponent triples."""
    toks = _tokens(text)
    pos = 0

    def expr():
        nonlocal pos
        total = term()
        while pos < len(toks) and toks[pos] == ("+",):
            pos += 1
            total |= term()
        return total

    def term():
        nonlocal pos
        acc = {(0, 0, 0)}
        while pos < len(toks) and toks[pos] not in (("+",), (")",)):
            t = toks[pos]
            pos += 1
            if t == ("(",):
                acc = _product(acc, expr())
                if toks[pos] != (")",):
                    raise ValueError("unbalanced parentheses")
                pos += 1
            elif t[0] == "L":
                acc = _product(acc, {(t[1] - y, y, 0) for y in range(t[1] + 1)})
            else:
                acc = _product(acc, _mono(t[1], t[2]))
        return acc

    out = expr()
    if pos != len(toks):
        raise ValueError(f"trailing tokens in {text!r}")
    return out


def parse_label(label):
    m, a, b = (int(x) for x in re.findall(r"\d+", label))
    return m, a, b
