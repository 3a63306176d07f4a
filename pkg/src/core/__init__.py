"""
코어 도메인 모듈

불변 도메인 객체와 포트 인터페이스를 포함합니다.
헥사고날 아키텍처의 핵심 계층입니다.
""" 