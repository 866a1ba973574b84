"""
Quotient Data Models
====================

Finite regular quotients of F_n given by the right-regular permutation
action of each generator on the group elements {0..m-1} (0 = identity).
"""

import itertools
import json
from pathlib import Path

from pydantic import BaseModel, Field, model_validator
from sympy.combinatorics import Permutation, PermutationGroup

from ..config import get_settings
from ..errors import QuotientSpecError

# quaternion units 1, i, j, k as 0..3; product table entry is (sign, unit)
_QUATERNION_TABLE = {
    (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
    (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
    (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
    (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
}


class QuotientSpec(BaseModel):
    """
    Regular action of a finite quotient Q of F_rank on itself.
    perms[i][v] is the image of element v under right multiplication by a_(i+1).
    """
    rank: int = Field(ge=1)
    degree: int = Field(ge=1)
    perms: list[list[int]]
    label: str = ""

    @model_validator(mode="after")
    def check_regular(self) -> "QuotientSpec":
        if len(self.perms) != self.rank:
            raise QuotientSpecError(f"expected {self.rank} permutations, got {len(self.perms)}")
        if self.degree > get_settings().quotient_closure_limit:
            raise QuotientSpecError(f"degree {self.degree} above the closure limit")
        m = self.degree
        for i, perm in enumerate(self.perms, start=1):
            if sorted(perm) != list(range(m)):
                raise QuotientSpecError(f"generator {i} does not permute 0..{m - 1}")

        # Transitive with a group of order m means the action is regular
        group = self.permutation_group()
        if not group.is_transitive():
            orbit = group.orbit(0)
            raise QuotientSpecError(f"action is not transitive: orbit of 0 has {len(orbit)} of {m}")
        order = group.order()
        if order != m:
            raise QuotientSpecError(f"action is not free: group of order {order} on {m} points")
        return self

    def permutation_group(self) -> PermutationGroup:
        return PermutationGroup([Permutation(p) for p in self.perms])

    def is_elementary_abelian_two(self) -> bool:
        """Whether Q is (Z/2)^rank with the generators as a basis."""
        if self.degree != 2 ** self.rank:
            return False
        gens = [Permutation(p) for p in self.perms]
        if not all((g ** 2).is_Identity for g in gens):
            return False
        return all(g * h == h * g for g in gens for h in gens)

    # ==========================================================================
    # Constructors
    # ==========================================================================

    @classmethod
    def abelian_mod_q(cls, n: int, q: int) -> "QuotientSpec":
        """(Z/q)^n; element x is indexed by sum x_i q^(i-1)."""
        if q < 2:
            raise QuotientSpecError(f"modulus must be at least 2, got {q}")
        m = q ** n
        perms = []
        for i in range(n):
            step = q ** i
            perm = []
            for v in range(m):
                digit = (v // step) % q
                perm.append(v + step if digit < q - 1 else v - (q - 1) * step)
            perms.append(perm)
        return cls(rank=n, degree=m, perms=perms, label=f"AbelianModQ({n},{q})")

    @classmethod
    def cyclic(cls, m: int) -> "QuotientSpec":
        """Rank-1 action by an m-cycle."""
        return cls(rank=1, degree=m, perms=[[(v + 1) % m for v in range(m)]], label=f"Cyclic({m})")

    @classmethod
    def quaternion(cls, n: int) -> "QuotientSpec":
        """Q8 with a_1, a_2, a_3, ... mapped to i, j, k, i, ...; needs n >= 2."""
        if n < 2:
            raise QuotientSpecError("the quaternion quotient needs rank >= 2")

        def index(sign: int, unit: int) -> int:
            return unit + 4 * (sign < 0)

        perms = []
        for t in range(n):
            gen_unit = (t % 3) + 1
            perm = []
            for sign, unit in itertools.product((1, -1), range(4)):
                s, u = _QUATERNION_TABLE[(unit, gen_unit)]
                perm.append(index(sign * s, u))
            perms.append(perm)
        return cls(rank=n, degree=8, perms=perms, label=f"Quaternion({n})")


def load_quotient_spec(path: str | Path) -> QuotientSpec:
    """Read ``{"rank", "degree", "perms"}`` or the shorthand ``{"rank", "mod"}``."""
    data = json.loads(Path(path).read_text())
    if "mod" in data:
        return QuotientSpec.abelian_mod_q(int(data["rank"]), int(data["mod"]))
    return QuotientSpec.model_validate(data)
