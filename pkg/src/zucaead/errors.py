"""Exception types shared across the library."""


class AuthenticationFailure(Exception):
    """Raised when an AEAD tag does not verify.

    Deliberately carries no detail: callers must not be able to tell a
    tampered ciphertext from a tampered tag, nonce, or associated data,
    and no plaintext accompanies the failure.
    """

    def __init__(self) -> None:
        super().__init__("authentication failed")
