"""Yang-Mills 李代数的精确计算"""
