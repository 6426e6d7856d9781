"""Query cost against T at fixed m and arboricity.

Doubling the number of planted K_8 blocks doubles T while m stays fixed;
total queries should fall roughly like 1/T.
"""

import csv
import io
from contextlib import redirect_stdout

import numpy as np

from arbotri.cli import main

buf = io.StringIO()
with redirect_stdout(buf):
    main(["bench", "--family", "cliques:n=3000,q=8,m=8000", "--sweep", "count=25,50,100,200",
          "--seeds", "0", "--sample-scale", "1e-3"])
rows = list(csv.DictReader(io.StringIO(buf.getvalue())))
for r in rows:
    print(f"T={r['T']:>6} queries={int(r['queries_total']):>9,d} rel_err={float(r['rel_err']):+.3f}")
T = np.array([float(r["T"]) for r in rows])
q = np.array([float(r["queries_total"]) for r in rows])
print(f"log-log slope {np.polyfit(np.log(T), np.log(q), 1)[0]:.2f}")
