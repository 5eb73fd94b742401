"""
仓库根目录加入 sys.path，使 core / database / handlers 可以按顶层包导入
"""

import sys
from pathlib import Path

ROOT = Path(__file__).parent
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))
