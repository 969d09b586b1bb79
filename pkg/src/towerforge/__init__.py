"""towerforge: exact reconstruction and analysis of recursive towers of
function fields over small finite fields.

Submodules:

* ``gf``        -- finite fields GF(p^k) with reproducible generators
* ``domains``   -- coefficient domains (finite fields, rationals, rational functions)
* ``poly``      -- sparse multivariate polynomials, quotient rings, root finding
* ``skew``      -- twisted polynomial rings and Drinfeld-module derivations
* ``catalog``   -- golden data (modular polynomials, towers) and loading
* ``identities`` -- machine verification of the catalog identities
* ``engine``    -- fiber/chain enumeration, ramification, genus bookkeeping
* ``cli``       -- the ``towerforge`` command line
"""

__version__ = "0.1.0"
