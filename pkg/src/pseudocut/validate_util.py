"""Shared precondition check for solver entry points."""

from .errors import InfeasibleInstanceError, InputError
from .graph import PseudocutInstance, validate


def require_valid(inst: PseudocutInstance) -> None:
    """Raise if validation reports anything: infeasibility or structural faults."""
    diags = validate(inst)
    if not diags:
        return
    if all("infeasible" in d for d in diags):
        raise InfeasibleInstanceError("; ".join(diags))
    raise InputError("; ".join(diags))
