"""
Adapters 패키지

외부 시스템과의 연결을 담당하는 어댑터들을 포함합니다.
헥사고날 아키텍처에서 인프라스트럭처 계층에 해당합니다.
""" 