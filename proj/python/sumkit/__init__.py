"""Series acceleration and divergent-series summation toolbox."""

try:
    from sumkit._sumkit import *  # noqa: F401,F403
    from sumkit._sumkit import __version__  # noqa: F401
except ImportError:  # in-tree build: module sits next to the package
    from _sumkit import *  # noqa: F401,F403
    from _sumkit import __version__  # noqa: F401
