"""Exceptions shared across grounding, solving, and auditing."""


class CapExceeded(Exception):
    """A configured size cap would be exceeded; nothing was computed."""


class DomainTooLarge(CapExceeded):
    """Grounding or Herbrand-base construction would exceed its cap."""


class UniverseTooLarge(CapExceeded):
    """Candidate enumeration or reduct enumeration would exceed its cap."""


class UnsafeRule(Exception):
    """A rule variable occurs only under default negation."""


class NotASplittingSet(Exception):
    """The literal set offered to split() fails the splitting condition."""
