"""Exception hierarchy.

Every domain error carries a short machine-readable ``code`` that the CLI
reports in its error JSON.
"""


class GaloisDspError(Exception):
    code = "domain_error"


class ModulusMismatch(GaloisDspError, ValueError):
    code = "modulus_mismatch"


class FieldMismatch(GaloisDspError, ValueError):
    code = "field_mismatch"


class NotPrime(GaloisDspError, ValueError):
    code = "not_prime"


class UnsupportedModulus(GaloisDspError, ValueError):
    code = "unsupported_modulus"


class ZeroInverse(GaloisDspError, ZeroDivisionError):
    code = "zero_inverse"


class ZeroArgument(GaloisDspError, ValueError):
    code = "zero_argument"


class NotAResidue(GaloisDspError, ValueError):
    code = "not_a_residue"


class InvalidLength(GaloisDspError, ValueError):
    code = "invalid_length"


class LengthMismatch(GaloisDspError, ValueError):
    code = "length_mismatch"


class OrderMismatch(GaloisDspError, ValueError):
    code = "order_mismatch"


class NotInAlphabet(GaloisDspError, ValueError):
    code = "not_in_alphabet"


class UnsupportedSequence(GaloisDspError, ValueError):
    code = "unsupported_sequence"


class DivergentSpectrum(GaloisDspError, ValueError):
    code = "divergent_spectrum"


class NonRealResult(GaloisDspError, ValueError):
    code = "non_real_result"


class PlanTooShort(GaloisDspError, ValueError):
    code = "plan_too_short"
