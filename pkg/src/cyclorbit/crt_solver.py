"""Solvability of congruence systems by prime-power splitting.

Factor every modulus, split each congruence into prime-power atoms
x = z (mod p^e), then scan the atoms keeping, per prime, only the strongest
constraint seen so far together with its reductions at every lower level.
A new atom is checked against that table in time polynomial in its own
size, never in the size of what is already stored, which is what keeps the
whole check linear for unary-sized inputs.  This route only decides
solvability; it does not produce the solution progression.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .congruence import CongruenceSystem


@dataclass(frozen=True)
class PrimePowerEquation:
    """One atom x = residue (mod prime**exponent), with 0 <= residue < modulus."""

    prime: int
    exponent: int
    residue: int

    @property
    def modulus(self) -> int:
        return self.prime**self.exponent

    def __str__(self):
        return f"{self.residue} mod {self.prime}^{self.exponent}"


@dataclass
class CrtStats:
    """Accounting for one solvability check.

    bit_ops charges comparisons at min(bit lengths) + 1 and reductions
    quadratically in the operand widths, the straightforward arithmetic
    model.  per_atom records (atom, bit_ops spent on that atom) so tests can
    pin down that cheap atoms stay cheap next to expensive neighbours.
    """

    p_max: int = 0
    e_max: int = 0
    bit_ops: int = 0
    per_atom: list[tuple[PrimePowerEquation, int]] = field(default_factory=list)

    def charge_compare(self, x: int, y: int) -> int:
        cost = min(x.bit_length(), y.bit_length()) + 1
        self.bit_ops += cost
        return cost

    def charge_mod(self, x: int, m: int) -> int:
        cost = (x.bit_length() + 1) * (m.bit_length() + 1)
        self.bit_ops += cost
        return cost


def factorize(b: int, stats: CrtStats | None = None) -> list[tuple[int, int]]:
    """Trial-division factorization: ascending (prime, exponent) pairs, product b."""
    if b < 1:
        raise ValueError(f"can only factor positive integers, got {b}")
    out = []
    x = b
    d = 2
    while d * d <= x:
        if x % d == 0:
            e = 0
            while x % d == 0:
                if stats is not None:
                    stats.charge_mod(x, d)
                x //= d
                e += 1
            out.append((d, e))
        elif stats is not None:
            stats.charge_mod(x, d)
        d += 1 if d == 2 else 2
    if x > 1:
        out.append((x, 1))
    return out


def split_equation(
    a: int, b: int, stats: CrtStats | None = None
) -> list[PrimePowerEquation]:
    """CRT split of x = a (mod b) into one atom per prime dividing b.

    b = 1 contributes nothing.  The conjunction of the atoms is equivalent
    to the original congruence because the prime-power moduli are coprime.
    """
    if b < 1:
        raise ValueError(f"modulus must be >= 1, got {b}")
    if not 0 <= a < b:
        raise ValueError(f"residue {a} not in [0, {b})")
    atoms = []
    for p, e in factorize(b, stats):
        q = p**e
        if stats is not None:
            stats.charge_mod(a, q)
        atoms.append(PrimePowerEquation(p, e, a % q))
    return atoms


def _refresh_levels(p: int, z: int, e: int, stats: CrtStats | None) -> list[int]:
    """[z mod p^1, ..., z mod p^e], cheapest first by reducing stepwise."""
    levels = [0] * e
    levels[e - 1] = z
    for level in range(e - 1, 0, -1):
        q = p**level
        if stats is not None:
            stats.charge_mod(levels[level], q)
        levels[level - 1] = levels[level] % q
    return levels


def decide_solvable(
    system: CongruenceSystem, stats: CrtStats | None = None
) -> bool:
    """True iff the system has a solution, by scanning prime-power atoms.

    Per prime p the tables hold the strongest atom seen (residue and
    exponent) plus that residue reduced at every level below it.  Each new
    atom with the same prime either matches the stored level exactly, or
    strengthens the constraint (then the stored residue must agree with the
    new one at the old level), or is weaker (then the stored reductions
    answer in one lookup).  Any disagreement refutes the system outright.
    """
    strongest: dict[int, tuple[int, int]] = {}
    levels: dict[int, list[int]] = {}
    for a, b in system:
        for atom in split_equation(a, b, stats):
            p, e_new, z_new = atom.prime, atom.exponent, atom.residue
            spent_before = stats.bit_ops if stats is not None else 0
            if stats is not None:
                if p > stats.p_max:
                    stats.p_max = p
                if e_new > stats.e_max:
                    stats.e_max = e_new
            held = strongest.get(p)
            if held is None:
                strongest[p] = (z_new, e_new)
                levels[p] = _refresh_levels(p, z_new, e_new, stats)
            else:
                z, e = held
                if stats is not None:
                    stats.charge_compare(e, e_new)
                if e_new == e:
                    if stats is not None:
                        stats.charge_compare(z, z_new)
                    if z_new != z:
                        return False
                elif e_new > e:
                    # incoming is stronger: must agree with the held residue
                    # at the held level, then replaces it
                    q = p**e
                    if stats is not None:
                        stats.charge_mod(z_new, q)
                        stats.charge_compare(z, z_new % q)
                    if z_new % q != z:
                        return False
                    strongest[p] = (z_new, e_new)
                    levels[p] = _refresh_levels(p, z_new, e_new, stats)
                else:
                    # incoming is weaker: one table lookup, no reduction of
                    # the (possibly huge) held residue
                    if stats is not None:
                        stats.charge_compare(levels[p][e_new - 1], z_new)
                    if levels[p][e_new - 1] != z_new:
                        return False
            if __debug__:
                z, e = strongest[p]
                assert len(levels[p]) == e and levels[p][e - 1] == z
                assert all(
                    levels[p][i - 1] == z % p**i for i in range(1, e + 1)
                )
            if stats is not None:
                stats.per_atom.append((atom, stats.bit_ops - spent_before))
    return True
