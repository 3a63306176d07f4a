"""
pytest 공통 설정

모듈들이 src 기준 절대 import 를 쓰므로 src 를 경로에 넣습니다.
"""

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "src"))
