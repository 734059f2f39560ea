"""Progress callback and Sentry hook tests"""

import logging
import warnings

from edgecalc import sentry
from edgecalc.exceptions import ConfigError, TruncationBound
from edgecalc.progress import (
    LoggingProgressCallback,
    NoOpProgressCallback,
    create_progress_callback,
)


def test_create_progress_callback():
    """quiet selects the no-op callback"""
    assert isinstance(create_progress_callback(quiet=True), NoOpProgressCallback)
    assert isinstance(create_progress_callback(), LoggingProgressCallback)


def test_logging_progress_callback(caplog):
    """Updates are logged with their context"""
    callback = LoggingProgressCallback()
    with caplog.at_level(logging.INFO, logger="edgecalc.progress"):
        callback.update("fredholm", 50, "Sweeping γ", rows=70)
    assert "Progress [fredholm] 50%: Sweeping γ rows=70" in caplog.text


def test_init_sentry_without_dsn(monkeypatch):
    """No DSN, no Sentry"""
    monkeypatch.setattr(sentry.settings, "sentry_dsn", None)
    assert sentry.init_sentry() is False


def test_before_send_filter_drops_config_errors():
    """Configuration errors never reach Sentry"""
    event = {"message": "boom"}
    config_hint = {"exc_info": (ConfigError, ConfigError("bad"), None)}
    bound_hint = {"exc_info": (TruncationBound, TruncationBound("l_max"), None)}
    assert sentry.before_send_filter(event, config_hint) is None
    assert sentry.before_send_filter(event, bound_hint) is event
    assert sentry.before_send_filter(event, {}) is event


def test_capture_exception_with_tags():
    """Tagged captures use the current scope API without deprecation warnings"""
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        sentry.capture_exception(RuntimeError("suite aborted"), {"command": "kernel"})
    assert not [w for w in caught if issubclass(w.category, DeprecationWarning)]
