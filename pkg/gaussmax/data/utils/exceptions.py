# Copyright (c) gauss-maxima developers. All rights reserved.


class GaussMaxError(ValueError):
    category = 'Error'

    def __init__(self, msg):
        super().__init__(msg)
        self.msg = msg

    def __str__(self):
        return f'{self.category}: {self.msg}'


class InvalidInput(GaussMaxError):
    category = 'Invalid input'


class NonSquareMatrix(InvalidInput):
    category = 'Non-square matrix'


class NotPSD(InvalidInput):
    category = 'Not positive semidefinite'


class NonFiniteEntries(InvalidInput):
    category = 'Non-finite entries'


class RhoOutOfRange(InvalidInput):
    category = 'Correlation out of range'


class DimensionMismatch(InvalidInput):
    category = 'Dimension mismatch'


class EmptyVector(InvalidInput):
    category = 'Empty vector'


class EmptyInput(InvalidInput):
    category = 'Empty input'


class NonPositiveBeta(InvalidInput):
    category = 'Non-positive beta'


class NegativeInput(InvalidInput):
    category = 'Negative input'


class NonPositiveInput(InvalidInput):
    category = 'Non-positive input'


class NonPositiveSigma(InvalidInput):
    category = 'Non-positive sigma'


class NonPositiveEpsilon(InvalidInput):
    category = 'Non-positive epsilon'


class NonPositiveParameter(InvalidInput):
    category = 'Non-positive parameter'


class POutOfRange(InvalidInput):
    category = 'Dimension p out of range'


class AlphaOutOfRange(InvalidInput):
    category = 'Alpha out of range'


class ParseError(GaussMaxError):
    category = 'Parse error'

    def __init__(self, msg, line=None):
        super().__init__(msg)
        self.line = line

    def __str__(self):
        if self.line is None:
            return f'{self.category}: {self.msg}'
        return f'{self.category} at line {self.line}: {self.msg}'


class EmptyData(GaussMaxError):
    category = 'Empty data'


class FileNotExisted(GaussMaxError):

    def __init__(self, path):
        super().__init__(str(path))
        self.path = path

    def __str__(self):
        return f'File {self.path} does not exist.'


class ConfigInvalid(GaussMaxError):
    category = 'Invalid config'


class NoDominatingConstant(GaussMaxError):
    category = 'No dominating constant'


class BoundViolation(GaussMaxError):
    category = 'Bound violation'
