"""troplab - Ultra-discrete periodic Toda lattice, box-ball system and tropical Jacobian

troplab contains the following modules:
troplab.troptools
troplab.toda
troplab.bbs
troplab.curve
troplab.jacobian
troplab.eigmap
troplab.verify

General workflow:
1) Read a box-ball state into a Toda state using troplab.bbs.beta
2) Compute its conserved vector C and evolve it using troplab.toda
3) Build the tropical curve of C using troplab.curve
4) Map the state to a divisor on the curve using troplab.eigmap.psi
5) Map the divisor to the tropical Jacobian using troplab.jacobian.eta
6) Check the correspondences on whole isolevel sets using troplab.verify
"""

__licence__ = 'MIT'
__version__ = (1, 0, 0)

import sys as _sys
if _sys.version_info[:2] < (3, 6):
    raise ImportError('Python version must be >= 3.6')

from . import troptools
from . import toda
from . import bbs
from . import curve
from . import jacobian
from . import eigmap
from . import verify
