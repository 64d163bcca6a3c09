"""Python access to the brumer verifier."""

import json as _json

from ._brumer import BrumerError, selftest, tate, theta, verify, verify_text

__all__ = ["BrumerError", "report", "selftest", "tate", "theta", "verify", "verify_text"]


def report(path, strict_provenance=False):
    """Verify a case file and return the report as a dict."""
    return _json.loads(verify(str(path), strict_provenance))
