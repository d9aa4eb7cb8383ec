from src.explicit.divided import gen_g, koe58_g
from src.explicit.explicit1 import explicit1_g, explicit_repeated_g
from src.explicit.explicit2 import explicit2_g
from src.explicit.groups import CoefficientGroups

__all__ = ["CoefficientGroups", "explicit1_g", "explicit2_g", "explicit_repeated_g", "gen_g", "koe58_g"]
