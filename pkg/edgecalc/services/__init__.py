"""Verification suites"""

from edgecalc.services.verification_service import VerificationService, run_suites

__all__ = ["VerificationService", "run_suites"]
