from typing import Sequence, Union

import galois
import numpy as np

#: A single element of a finite field, a 0-d galois array
FieldElement = galois.FieldArray

#: A length-n codeword, either a galois array or plain integers
#: in the integer representation of the field
Word = Union[galois.FieldArray, np.ndarray, Sequence[int]]
