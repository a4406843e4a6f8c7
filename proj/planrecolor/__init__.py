from ._planrecolor import *  # noqa: F401,F403
