class SizeGuardError(ValueError):
    """An exhaustive routine was asked to handle an instance above its guard."""
