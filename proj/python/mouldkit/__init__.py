from ._mouldkit import *  # noqa: F401,F403
from ._mouldkit import InsufficientCap, NotInImage, NotRepresentable  # noqa: F401
