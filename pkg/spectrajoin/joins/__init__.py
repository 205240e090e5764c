from .operations import JoinKind, join, nns_join, ns_join, plain_join

__all__ = ["JoinKind", "join", "nns_join", "ns_join", "plain_join"]
