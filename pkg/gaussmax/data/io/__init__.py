from .matrix_codec import decode_gmax, encode_gmax, parse_matrix_csv, sniff_format

__all__ = ["decode_gmax", "encode_gmax", "parse_matrix_csv", "sniff_format"]
