"""Package initialization file"""
