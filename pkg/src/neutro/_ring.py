class RingElement:
    """Marker for non-scalar values usable as coefficients of a+bI and a+sum(bk Ik)."""

    __slots__ = ()

    def is_zero(self) -> bool:
        raise NotImplementedError
