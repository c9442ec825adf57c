from consensus import constants
from consensus.binary_consensus_impl.exceptions.exceptions import InvalidSubsetError


class SubsetMask(object):
    """
    Represents a subset S of the nodes {1, ..., n} as a 64-bit integer mask, bit k set when node k+1 is in S
    """

    def __init__(self, mask, n):
        """
        Initialize the subset

        Args:
            :mask: non-negative integer bitmask over 0-based node indices
            :n: number of nodes of the graph

        Raises:
            :InvalidSubsetError: if n exceeds the mask width or the mask references nodes outside of the graph
        """
        if n < 1 or n > constants.SPECTRAL.MAX_MASK_BITS:
            raise InvalidSubsetError("Subset masks support 1 <= n <= {}, got: {}".format(
                constants.SPECTRAL.MAX_MASK_BITS, n))
        if mask < 0 or mask >> n:
            raise InvalidSubsetError("Mask {:#x} references nodes outside of 1..{}".format(mask, n))
        self.mask = int(mask)
        self.n = int(n)

    @classmethod
    def from_members(cls, members, n):
        """
        Args:
            :members: iterable of 1-based node indices
            :n: number of nodes of the graph

        Returns:
            the subset
        """
        mask = 0
        for member in members:
            if not (1 <= member <= n):
                raise InvalidSubsetError("Node {} is outside of 1..{}".format(member, n))
            mask |= 1 << (member - 1)
        return cls(mask, n)

    @classmethod
    def full(cls, n):
        return cls((1 << n) - 1, n)

    @property
    def indices(self):
        """
        Returns:
            sorted list of the 0-based indices of the members
        """
        return [k for k in range(self.n) if self.mask >> k & 1]

    @property
    def complement_indices(self):
        return [k for k in range(self.n) if not self.mask >> k & 1]

    @property
    def members(self):
        """
        Returns:
            sorted list of the 1-based indices of the members
        """
        return [k + 1 for k in self.indices]

    @property
    def size(self):
        return bin(self.mask).count("1")

    def is_empty(self):
        return self.mask == 0

    def __contains__(self, member):
        return 1 <= member <= self.n and bool(self.mask >> (member - 1) & 1)

    def __len__(self):
        return self.size

    def __eq__(self, other):
        return isinstance(other, SubsetMask) and self.mask == other.mask and self.n == other.n

    def __hash__(self):
        return hash((self.mask, self.n))

    def __repr__(self):
        return "SubsetMask({})".format(self.members)
