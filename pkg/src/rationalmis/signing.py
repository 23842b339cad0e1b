"""Digital-signature layer certifying pair randomness.

The default backend is an ideal functionality: a simulation-trusted log of
issued (signer, message) pairs with unguessable tags.  Unforgeability is
absolute: verification succeeds only for signatures the registry actually
issued, so no sequence of deviator actions without the private handle can
fabricate one.  An Ed25519 backend is provided for fidelity experiments;
protocol code is agnostic to which is active.

The canonical signing input for a pair-randomness tuple is the big-endian
encoding (64-bit iteration, 32-bit issuer, 32-bit recipient, rank bits).
"""

from __future__ import annotations

import hashlib
import hmac
import struct


class SigningError(RuntimeError):
    pass


def encode_pair_rand(iteration: int, issuer: int, recipient: int, bits: int, nbits: int) -> bytes:
    """Fixed-width encoding of the signed tuple; identical at every node."""
    nbytes = (nbits + 7) // 8
    return struct.pack(">QII", iteration, issuer, recipient) + bits.to_bytes(nbytes, "big")


class IdealSignatureScheme:
    """Issued-signature registry with deterministic unguessable tags."""

    def __init__(self, registry_seed: int = 0):
        self._root = registry_seed.to_bytes(8, "big", signed=False)
        self._secrets: dict[int, bytes] = {}
        self._issued: set[tuple[int, bytes, bytes]] = set()

    def keygen(self, node: int) -> int:
        """Register a fresh key pair; the node id doubles as the public handle."""
        if node in self._secrets:
            raise SigningError(f"duplicate keygen for node {node}")
        self._secrets[node] = hashlib.sha256(self._root + node.to_bytes(8, "big")).digest()
        return node

    def sign(self, node: int, message: bytes) -> bytes:
        if node not in self._secrets:
            raise SigningError(f"sign with unregistered node {node}")
        sig = hmac.new(self._secrets[node], message, hashlib.sha256).digest()[:16]
        self._issued.add((node, message, sig))
        return sig

    def verify(self, node: int, message: bytes, sig) -> bool:
        if not isinstance(sig, (bytes, bytearray)) or node not in self._secrets:
            return False
        return (node, bytes(message), bytes(sig)) in self._issued


class Ed25519SignatureScheme:
    """Real asymmetric backend; interface-compatible with the ideal scheme."""

    def __init__(self, registry_seed: int = 0):
        from cryptography.hazmat.primitives.asymmetric import ed25519

        self._ed25519 = ed25519
        self._root = registry_seed
        self._private: dict[int, object] = {}
        self._public: dict[int, object] = {}

    def keygen(self, node: int) -> int:
        if node in self._private:
            raise SigningError(f"duplicate keygen for node {node}")
        seed = hashlib.sha256(b"ed25519" + self._root.to_bytes(8, "big") + node.to_bytes(8, "big")).digest()
        key = self._ed25519.Ed25519PrivateKey.from_private_bytes(seed)
        self._private[node] = key
        self._public[node] = key.public_key()
        return node

    def sign(self, node: int, message: bytes) -> bytes:
        if node not in self._private:
            raise SigningError(f"sign with unregistered node {node}")
        return self._private[node].sign(message)

    def verify(self, node: int, message: bytes, sig) -> bool:
        if not isinstance(sig, (bytes, bytearray)) or node not in self._public:
            return False
        try:
            self._public[node].verify(bytes(sig), message)
            return True
        except Exception:
            return False


def make_registry(n: int, registry_seed: int = 0, backend: str = "ideal"):
    """Key registry covering nodes 0..n-1."""
    if backend == "ideal":
        scheme = IdealSignatureScheme(registry_seed)
    elif backend == "ed25519":
        scheme = Ed25519SignatureScheme(registry_seed)
    else:
        raise SigningError(f"unknown signature backend {backend!r}")
    for i in range(n):
        scheme.keygen(i)
    return scheme
