import troptools
import toda
import bbs
import curve
import jacobian
import eigmap
import verify
import cli
