# core/conf.py

from django.conf import settings
from django.core.exceptions import ImproperlyConfigured

from .rationals import rational
from .exceptions import RationalParseError

DEFAULTS = {
    'THREADS': '1',
    'EPAS_NET_CAP': '64',
    'EXACT_BALL_CAP': '200',
    'HUB_C': '4',
}

_POSITIVE_INTS = {'THREADS', 'EPAS_NET_CAP', 'EXACT_BALL_CAP'}


def lab_setting(name):
    """
    Reads one entry of settings.KCLAB, falling back to DEFAULTS when Django is
    not configured (plain library use). Integers and rationals come back typed.
    """
    raw = DEFAULTS[name]
    if settings.configured:
        raw = getattr(settings, 'KCLAB', {}).get(name, raw)

    if name in _POSITIVE_INTS:
        try:
            value = int(raw)
        except (TypeError, ValueError):
            raise ImproperlyConfigured(f"KCLAB['{name}'] must be an integer, got {raw!r}")
        if value < 1:
            raise ImproperlyConfigured(f"KCLAB['{name}'] must be at least 1, got {value}")
        return value

    try:
        return rational(raw)
    except RationalParseError:
        raise ImproperlyConfigured(f"KCLAB['{name}'] must be a rational, got {raw!r}")
