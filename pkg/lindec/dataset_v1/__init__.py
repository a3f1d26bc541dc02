from lindec.dataset_v1.csv_io import load_csv, write_csv
from lindec.dataset_v1.models import ColumnSchema, ColumnSpec, Dataset, ShiftSplit, Standardizer
from lindec.dataset_v1.preprocess import apply_standardizer, fit_standardizer, invert_standardizer
from lindec.dataset_v1.splits import quantile_shift_split, train_test_split
from lindec.dataset_v1.synthetic import generate_synthetic

__all__ = [
    "ColumnSchema",
    "ColumnSpec",
    "Dataset",
    "ShiftSplit",
    "Standardizer",
    "apply_standardizer",
    "fit_standardizer",
    "generate_synthetic",
    "invert_standardizer",
    "load_csv",
    "quantile_shift_split",
    "train_test_split",
    "write_csv",
]
