"""
응용 서비스 계층

유스케이스를 구현하고 도메인과 인프라 계층을 조율합니다.
""" 