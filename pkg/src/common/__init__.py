"""
공통 모듈 패키지

전역 Enum 등 계층 공통으로 쓰는 정의를 포함합니다.
"""
