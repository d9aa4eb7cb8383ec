from src.recurrences.convolution import ConvolutionTable, convolution_g
from src.recurrences.recal import RowMultiplicity, recal_g

__all__ = ["ConvolutionTable", "RowMultiplicity", "convolution_g", "recal_g"]
