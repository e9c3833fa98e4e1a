class UnionFind:
    """
    Union-find over the integers 0..size-1, with path compression and union
    by rank, counting the number of classes as it goes.
    """

    def __init__(self, size: int):
        self.size: int = size
        # initially all elements disconnected
        self.parents: list[int] = list(range(size))
        # upper bound on the height of each root's tree
        self.ranks: list[int] = [0] * size
        self.num_components: int = size

    def find_parent(self, elem: int) -> int:
        p = elem
        # an element is a root parent if its parent is itself
        while p != self.parents[p]:
            p = self.parents[p]

        # compress the path taken so all elements point to the root directly
        while elem != p:
            self.parents[elem], elem = p, self.parents[elem]

        return p

    def union(self, a: int, b: int) -> bool:
        """
        Merge the classes of a and b.

        Returns:
            bool: True if they were in different classes.
        """

        p1 = self.find_parent(a)
        p2 = self.find_parent(b)
        if p1 == p2:
            return False

        if self.ranks[p1] < self.ranks[p2]:
            p1, p2 = p2, p1
        self.parents[p2] = p1
        if self.ranks[p1] == self.ranks[p2]:
            self.ranks[p1] += 1
        self.num_components -= 1
        return True

    def union_all(self, elems) -> None:
        """Merge the classes of every element of an iterable."""

        it = iter(elems)
        first = next(it, None)
        if first is None:
            return
        for e in it:
            self.union(first, e)

    def retrieve_components(self) -> list[list[int]]:
        """
        Get the classes, each sorted, ordered by their smallest element.
        """

        components: dict[int, list[int]] = {}
        for i in range(self.size):
            components.setdefault(self.find_parent(i), []).append(i)
        return list(components.values())
