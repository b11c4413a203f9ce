"""Executable bijections behind the parity-succession counting results.

Three families of maps, all verified bijective by exhaustive enumeration in
the test suite:

1. Tail maps (`classify_tail`, `tail_forward`, `tail_inverse`).  Write
   c(n, d, a) for the number of compositions of n with d parts and a parity
   successions, and call the compositions ending in a part of size 1 or 2
   the *tail-restricted* family at (n, d, a).  `tail_forward` maps the
   disjoint union

       {tail-restricted at (n, d, a)}  u  {compositions at (n-3, d-2, a-2)}

   onto

       {tail-restricted at (n-1, d-1, a-1)}  u  {tail-restricted at (n-2, d, a)}
       u  {tail-restricted at (n-2, d-1, a-1)}  u  {compositions at (n-3, d-2, a)}

   by removing or shrinking trailing parts according to the tail class; the
   size bookkeeping of the five cases proves the eight-term recurrence
   checked by `closed_forms.count_recurrence_holds`.

2. Part splitting (`split_colored`, `merge_alternating`).  A *colored*
   composition has parts odd and >= 3, a part of size i carrying one of
   (i-1)//2 colors; kind "A" elements are entirely colored and exist in two
   copies, kind "B" elements carry an uncolored head part.  Replacing each
   colored part i of color k by the adjacent pieces i-2k and 2k (order set
   by the copy tag, or forced by the head's parity) is a bijection onto the
   parity-alternating compositions; hence the colored population of size n
   equals `closed_forms.alternating_count(n)`.

3. Head adjustment (`head_forward`).  Growing or shrinking the first part of
   a colored element by two (with color bookkeeping) maps sizes
   {n-2, n-3} onto {head-special elements of size n} u {size n-4}, proving
   the fourth-order recurrence for the alternating count.
"""

from __future__ import annotations

from dataclasses import dataclass

from .compositions import Composition, SuccessionParams, succession_count

_PARITY = SuccessionParams(2, 0)


def _succ(parts: tuple[int, ...]) -> int:
    return sum(1 for u, v in zip(parts, parts[1:]) if (v - u) % 2 == 0)


def classify_tail(pi: Composition) -> int | None:
    """Tail class 1..4 of a composition ending in a part of size 1 or 2,
    or None when the last part is >= 3 (or the composition is empty).

    With x odd, y even and z >= 3, the classes collect the endings
    1+1 or x+1+2 (class 1), y+2+1 or 2+2 (class 2), x+2+1 or y+1+2
    (class 3), and z+1 or z+2 (class 4).  Compositions too short to contain
    a full pattern treat the missing preceding part as even; those cases lie
    outside the audited range d >= 3.
    """
    parts = pi.parts
    if not parts or parts[-1] >= 3:
        return None
    last = parts[-1]
    prev = parts[-2] if len(parts) >= 2 else None
    prev2 = parts[-3] if len(parts) >= 3 else None
    if last == 1:
        if prev == 1:
            return 1
        if prev == 2:
            return 3 if prev2 is not None and prev2 % 2 == 1 else 2
        return 1 if prev is None else 4
    # last == 2
    if prev == 1:
        return 1 if prev2 is not None and prev2 % 2 == 1 else 3
    if prev == 2:
        return 2
    return 2 if prev is None else 4


_CASE_BY_CLASS = {1: "i", 2: "ii", 3: "iii", 4: "iv"}


def _tail_step(pi: Composition, n: int, d: int, a: int) -> tuple[str, Composition]:
    if n < 4 or d < 3:
        raise ValueError(f"tail map is defined for n >= 4 and d >= 3, got n={n}, d={d}")
    parts = pi.parts
    size = sum(parts)
    if size == n:
        if len(parts) != d or _succ(parts) != a or parts[-1] >= 3:
            raise ValueError(f"{pi} is not tail-restricted at (n={n}, d={d}, a={a})")
        cls = classify_tail(pi)
        assert cls is not None
        case = _CASE_BY_CLASS[cls]
        if cls == 1:
            # drop the rightmost 1: the last part of ...1+1, the middle of ...x+1+2
            image = parts[:-1] if parts[-1] == 1 else parts[:-2] + (2,)
        elif cls == 2:
            # drop the rightmost 2: the last part of ...2+2, the middle of ...y+2+1
            image = parts[:-1] if parts[-1] == 2 else parts[:-2] + (1,)
        elif cls == 3:
            image = parts[:-2]
        else:
            image = parts[:-2] + (parts[-2] - 2, parts[-1])
        return case, Composition(image)
    if size == n - 3:
        if len(parts) != d - 2 or _succ(parts) != a - 2:
            raise ValueError(f"{pi} does not lie at (n={n - 3}, d={d - 2}, a={a - 2})")
        # append a part matching the last part's parity, creating one succession
        return "v", Composition(parts + ((1,) if parts[-1] % 2 == 1 else (2,)))
    raise ValueError(f"{pi} has size {size}, expected {n} or {n - 3}")


def tail_forward(pi: Composition, n: int, d: int, a: int) -> Composition:
    """Apply the tail map to a domain element of the (n, d, a) cell.

    Elements of size n must be tail-restricted with d parts and a
    successions; elements of size n-3 must have d-2 parts and a-2
    successions.  Anything else is rejected.
    """
    return _tail_step(pi, n, d, a)[1]


def tail_inverse(pi: Composition, n: int, d: int, a: int) -> Composition:
    """Inverse of `tail_forward` on the codomain of the (n, d, a) cell.

    The component is identified by (size, parts, successions); the trailing
    pattern then determines which case to undo.
    """
    if n < 4 or d < 3:
        raise ValueError(f"tail map is defined for n >= 4 and d >= 3, got n={n}, d={d}")
    parts = pi.parts
    size, dd = sum(parts), len(parts)
    succ = _succ(parts)
    small_tail = bool(parts) and parts[-1] <= 2
    if size == n - 1 and dd == d - 1 and succ == a - 1 and small_tail:
        if parts[-1] == 1:
            return Composition(parts + (1,))  # undo case i (1+1 ending)
        if parts[-2] % 2 == 1:
            return Composition(parts[:-1] + (1, 2))  # undo case i (x+1+2 ending)
        return Composition(parts[:-1])  # undo case v (even-tailed source)
    if size == n - 2 and dd == d and succ == a and small_tail:
        return Composition(parts[:-2] + (parts[-2] + 2, parts[-1]))  # undo case iv
    if size == n - 2 and dd == d - 1 and succ == a - 1 and small_tail:
        if parts[-1] == 2:
            return Composition(parts + (2,))  # undo case ii (2+2 ending)
        if parts[-2] % 2 == 0:
            return Composition(parts[:-1] + (2, 1))  # undo case ii (y+2+1 ending)
        return Composition(parts[:-1])  # undo case v (odd-tailed source)
    if size == n - 3 and dd == d - 2 and succ == a:
        tail = (1, 2) if parts[-1] % 2 == 0 else (2, 1)
        return Composition(parts + tail)  # undo case iii
    raise ValueError(f"{pi} is not in the tail-map codomain of cell (n={n}, d={d}, a={a})")


def tail_domain(n: int, d: int, a: int) -> list[Composition]:
    """Domain of the tail map at cell (n, d, a), in enumeration order."""
    from .compositions import enumerate_compositions

    if n < 4 or d < 3:
        raise ValueError(f"cells require n >= 4 and d >= 3, got n={n}, d={d}")
    out = [
        pi
        for pi in enumerate_compositions(n, d)
        if pi.parts[-1] <= 2 and _succ(pi.parts) == a
    ]
    if n - 3 >= d - 2 >= 1 and a - 2 >= 0:
        out += [
            pi
            for pi in enumerate_compositions(n - 3, d - 2)
            if _succ(pi.parts) == a - 2
        ]
    return out


def tail_codomain(n: int, d: int, a: int) -> list[Composition]:
    """Codomain of the tail map at cell (n, d, a), in enumeration order."""
    from .compositions import enumerate_compositions

    if n < 4 or d < 3:
        raise ValueError(f"cells require n >= 4 and d >= 3, got n={n}, d={d}")
    out: list[Composition] = []
    for size, parts_count, succ, restricted in (
        (n - 1, d - 1, a - 1, True),
        (n - 2, d, a, True),
        (n - 2, d - 1, a - 1, True),
        (n - 3, d - 2, a, False),
    ):
        if size < 0 or not 0 <= parts_count <= size or succ < 0 or parts_count < 1:
            continue
        for pi in enumerate_compositions(size, parts_count):
            if _succ(pi.parts) != succ:
                continue
            if restricted and pi.parts[-1] > 2:
                continue
            out.append(pi)
    return out


def _render(parts: tuple[int, ...]) -> str:
    return "+".join(map(str, parts)) if parts else "-"


def _parse(text: str) -> Composition:
    if text == "-":
        return Composition(())
    return Composition(tuple(int(t) for t in text.split("+")))


def tail_trace_lines(n: int, d: int, a: int) -> list[str]:
    """Audit trace for one cell: a header line, then one line per domain
    element in the form `domain-element TAB case-id TAB image-element`."""
    lines = [f"# tail-bijection n={n} d={d} a={a}"]
    for pi in tail_domain(n, d, a):
        case, image = _tail_step(pi, n, d, a)
        lines.append(f"{_render(pi.parts)}\t{case}\t{_render(image.parts)}")
    return lines


def check_tail_trace(lines: list[str]) -> int:
    """Re-verify a tail-bijection trace; returns the number of checked
    entries, raising ValueError on the first mismatch."""
    cell: tuple[int, int, int] | None = None
    checked = 0
    for line in lines:
        line = line.rstrip("\n")
        if not line:
            continue
        if line.startswith("#"):
            fields = dict(tok.split("=") for tok in line[1:].split() if "=" in tok)
            cell = (int(fields["n"]), int(fields["d"]), int(fields["a"]))
            continue
        if cell is None:
            raise ValueError("trace entry before any cell header")
        domain_text, case, image_text = line.split("\t")
        pi = _parse(domain_text)
        got_case, got_image = _tail_step(pi, *cell)
        if got_case != case or got_image != _parse(image_text):
            raise ValueError(
                f"trace mismatch at {domain_text} in cell {cell}: "
                f"recomputed ({got_case}, {_render(got_image.parts)})"
            )
        if tail_inverse(got_image, *cell) != pi:
            raise ValueError(f"inverse fails to undo {domain_text} in cell {cell}")
        checked += 1
    return checked


@dataclass(frozen=True, slots=True)
class ColoredComposition:
    """Composition whose colored parts are odd and >= 3, each carrying a color.

    kind "A": every part is colored and `copy` is 1 or 2, distinguishing the
    two piece orientations used by `split_colored`.  kind "B": an uncolored
    head part of any size followed by colored parts, `copy` is None; the
    empty element (kind "B", no parts) is the single size-0 member.  A
    colored part of size i admits colors 1..(i-1)//2; color (i-1)//2 is
    called maximal.
    """

    kind: str
    parts: tuple[int, ...]
    colors: tuple[int, ...]
    copy: int | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", tuple(self.parts))
        object.__setattr__(self, "colors", tuple(self.colors))
        if any(not isinstance(p, int) or p < 1 for p in self.parts):
            raise ValueError(f"parts must be positive integers, got {self.parts!r}")
        if self.kind == "A":
            if not self.parts:
                raise ValueError("kind-A elements are nonempty (size 0 is the kind-B empty element)")
            if self.copy not in (1, 2):
                raise ValueError(f"kind-A elements need copy in (1, 2), got {self.copy!r}")
            colored = self.parts
        elif self.kind == "B":
            if self.copy is not None:
                raise ValueError("kind-B elements carry no copy tag")
            colored = self.parts[1:]
        else:
            raise ValueError(f"kind must be 'A' or 'B', got {self.kind!r}")
        if len(self.colors) != len(colored):
            raise ValueError(f"need one color per colored part, got {len(self.colors)} for {len(colored)}")
        for part, color in zip(colored, self.colors):
            if part < 3 or part % 2 == 0:
                raise ValueError(f"colored parts must be odd and >= 3, got {part}")
            if not 1 <= color <= (part - 1) // 2:
                raise ValueError(f"color {color} out of range 1..{(part - 1) // 2} for part {part}")

    @property
    def size(self) -> int:
        return sum(self.parts)


def _colored_tuples(n: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    # all (parts, colors) with odd parts >= 3 summing to n, lexicographic
    if n == 0:
        return [((), ())]
    out = []
    for first in range(3, n + 1, 2):
        for color in range(1, (first - 1) // 2 + 1):
            for rest_parts, rest_colors in _colored_tuples(n - first):
                out.append(((first, *rest_parts), (color, *rest_colors)))
    return out


def enumerate_colored(n: int) -> list[ColoredComposition]:
    """All colored elements of size n: two copies of each all-colored
    composition, then every headed composition; size 0 gives the single
    empty element.  The total count equals alternating_count(n)."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n == 0:
        return [ColoredComposition("B", (), ())]
    out = []
    for parts, colors in _colored_tuples(n):
        out.append(ColoredComposition("A", parts, colors, copy=1))
        out.append(ColoredComposition("A", parts, colors, copy=2))
    for head in range(1, n + 1):
        for parts, colors in _colored_tuples(n - head):
            out.append(ColoredComposition("B", (head, *parts), colors))
    return out


def is_head_special(elem: ColoredComposition) -> bool:
    """First part maximal (kind A) or a head of size 1 or 2 (kind B)."""
    if elem.kind == "A":
        return elem.colors[0] == (elem.parts[0] - 1) // 2
    return bool(elem.parts) and elem.parts[0] in (1, 2)


def split_colored(elem: ColoredComposition) -> Composition:
    """Replace each colored part i of color k by the pieces i-2k and 2k.

    Copy 1 of a kind-A element emits the odd piece first, copy 2 the even
    piece first; for kind-B elements the orientation is forced by the head's
    parity.  The result is a parity-alternating composition of the same size
    with an even (kind A) or odd (kind B) number of parts.
    """
    if elem.kind == "A":
        odd_first = elem.copy == 1
        pieces: list[int] = []
        tail = zip(elem.parts, elem.colors)
    else:
        if not elem.parts:
            return Composition(())
        head = elem.parts[0]
        odd_first = head % 2 == 0  # an even head must be followed by an odd piece
        pieces = [head]
        tail = zip(elem.parts[1:], elem.colors)
    for part, color in tail:
        odd_piece, even_piece = part - 2 * color, 2 * color
        pieces += [odd_piece, even_piece] if odd_first else [even_piece, odd_piece]
    return Composition(tuple(pieces))


def merge_alternating(pi: Composition) -> ColoredComposition:
    """Inverse of `split_colored`: pair up the pieces of a parity-alternating
    composition into colored parts.  Rejects input with a parity succession."""
    parts = pi.parts
    if succession_count(pi, _PARITY) != 0:
        raise ValueError(f"{pi} has a parity succession and is not in the image")
    if not parts:
        return ColoredComposition("B", (), ())

    def pair_up(pieces: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
        merged, colors = [], []
        for u, v in zip(pieces[::2], pieces[1::2]):
            even_piece = u if u % 2 == 0 else v
            merged.append(u + v)
            colors.append(even_piece // 2)
        return tuple(merged), tuple(colors)

    if len(parts) % 2 == 0:
        merged, colors = pair_up(parts)
        return ColoredComposition("A", merged, colors, copy=1 if parts[0] % 2 == 1 else 2)
    merged, colors = pair_up(parts[1:])
    return ColoredComposition("B", (parts[0], *merged), colors)


def head_forward(elem: ColoredComposition, n: int) -> ColoredComposition:
    """Size-shifting first-part adjustment: maps the colored elements of sizes
    n-2 and n-3 bijectively onto the head-special elements of size n together
    with the elements of size n-4, for n >= 5.

    Kind A from size n-2: grow a maximal first part by two (bumping its color,
    which keeps it maximal) or shrink a non-maximal first part by two (same
    color).  Kind A from size n-3: prepend a part 3 with color 1 (maximal).
    Kind B from size n-2: a head of 1 keeps its head and grows the second part
    (second stays non-maximal); a bigger head gains a new head of 2 (odd head)
    or of 1 with the head bumped to odd (even head), the old head becoming a
    maximal colored part.  Kind B from size n-3: a head of 1 becomes 2 with
    the second part grown; a bigger head shrinks by one, landing at size n-4.
    """
    if n < 5:
        raise ValueError(f"head map is defined for n >= 5, got {n}")
    size = elem.size
    parts, colors = elem.parts, elem.colors
    if size == n - 2:
        if elem.kind == "A":
            i, k = parts[0], colors[0]
            if k == (i - 1) // 2:
                return ColoredComposition("A", (i + 2, *parts[1:]), (k + 1, *colors[1:]), copy=elem.copy)
            return ColoredComposition("A", (i - 2, *parts[1:]), colors, copy=elem.copy)
        head = parts[0]
        if head == 1:
            return ColoredComposition("B", (1, parts[1] + 2, *parts[2:]), colors)
        if head % 2 == 1:
            return ColoredComposition("B", (2, head, *parts[1:]), ((head - 1) // 2, *colors))
        return ColoredComposition("B", (1, head + 1, *parts[1:]), (head // 2, *colors))
    if size == n - 3:
        if elem.kind == "A":
            return ColoredComposition("A", (3, *parts), (1, *colors), copy=elem.copy)
        head = parts[0]
        if head == 1:
            return ColoredComposition("B", (2, parts[1] + 2, *parts[2:]), colors)
        return ColoredComposition("B", (head - 1, *parts[1:]), colors)
    raise ValueError(f"element of size {size} is outside the domain sizes {n - 2} and {n - 3}")
