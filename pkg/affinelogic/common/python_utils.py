import os

from .errors import ConfigError

# raw product points allowed before an ultramean is refused
DEFAULT_PRODUCT_CAP = 10**6

PRODUCT_CAP_ENV = 'AL_PRODUCT_CAP'


def get_product_cap(cap: int or None = None) -> int:
    """Resolves the product-size cap.

    An explicit ``cap`` wins, then the ``AL_PRODUCT_CAP`` environment variable, then
    ``DEFAULT_PRODUCT_CAP``.
    """
    if cap is None:
        cap = os.environ.get(PRODUCT_CAP_ENV, DEFAULT_PRODUCT_CAP)
    try:
        cap = int(cap)
    except (TypeError, ValueError):
        raise ConfigError(f"product cap must be an integer, got {cap!r}.")
    if cap < 1:
        raise ConfigError(f"product cap must be positive, got {cap}.")
    return cap