"""Sentry configuration and initialization"""

import logging
from typing import Optional

import sentry_sdk
from sentry_sdk.integrations.logging import LoggingIntegration

from edgecalc import __version__
from edgecalc.config import settings

logger = logging.getLogger(__name__)


def init_sentry() -> bool:
    """
    Initialize the Sentry SDK when a DSN is configured

    Returns:
        True if Sentry was initialized
    """
    if not settings.sentry_dsn:
        logger.debug("Sentry DSN not configured, skipping Sentry initialization")
        return False

    try:
        sentry_sdk.init(
            dsn=settings.sentry_dsn,
            environment=settings.sentry_environment,
            traces_sample_rate=settings.sentry_traces_sample_rate,
            integrations=[
                LoggingIntegration(
                    level=logging.INFO,  # breadcrumbs
                    event_level=logging.ERROR,
                ),
            ],
            release=f"edgecalc@{__version__}",
            before_send=before_send_filter,
        )
        sentry_sdk.set_tag("component", "cli")
        logger.info(f"Sentry initialized for environment: {settings.sentry_environment}")
        return True
    except Exception as e:
        logger.error(f"Failed to initialize Sentry: {e}")
        return False


def before_send_filter(event, hint):
    """Drop configuration errors before they reach Sentry"""
    if "exc_info" in hint:
        exc_type = hint["exc_info"][0].__name__
        if exc_type in ("ConfigError", "ValidationError"):
            return None
    return event


def capture_exception(exception: Exception, context: Optional[dict] = None) -> None:
    """Capture an exception with optional tags"""
    if context:
        with sentry_sdk.new_scope() as scope:
            for key, value in context.items():
                scope.set_tag(key, value)
            sentry_sdk.capture_exception(exception)
    else:
        sentry_sdk.capture_exception(exception)
