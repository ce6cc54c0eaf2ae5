"""Shared exception types."""

__all__ = ["CapabilityError"]


class CapabilityError(RuntimeError):
    """A requested computation exceeds a deliberate size guard.

    Raised instead of silently running for hours (or exhausting memory);
    the message names the cap.  The CLI maps this to exit code 3.
    """
