"""Multi-class anomaly detection for gravitational-wave glitch metadata.

Tabular glitch records (peak frequency, SNR, duration, ...) are classified
into 22 glitch families by tree ensembles (CART/C4.5 trees, random forests,
extremely randomized trees, AdaBoost, gradient boosting), classical
baselines (KNN, Gaussian naive Bayes, logistic regression), and a small
from-scratch neural engine (dense / 1-D conv / max-pool / LSTM layers).
Two ensembles sit on top: ShallowWaves (hard vote over RF + ERT + gbtree
boosting) and DeepWaves (four CNN/LSTM branches merged by a linear head).
Trained ensembles can be served by a master-worker streaming service where
each worker hosts one ensemble member or branch.
"""

__version__ = "0.1.0"

from gwml.errors import GwmlError

__all__ = ["GwmlError", "__version__"]
