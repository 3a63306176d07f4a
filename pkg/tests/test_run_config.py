"""
실행 설정 DTO 테스트
"""

import pytest

from application.dtos.run_config import RunConfig
from constants import DEFAULT_DEGREE_WINDOW, DEFAULT_LATTICE_BOUND


class TestRunConfig:
    """설정 병합과 검증 테스트"""

    def test_defaults(self):
        config = RunConfig()
        assert config.window == DEFAULT_DEGREE_WINDOW
        assert config.lattice_bound == DEFAULT_LATTICE_BOUND
        assert config.cache_dir is None

    def test_merged_ignores_none(self):
        config = RunConfig().merged({"workers": None, "strands": 4})
        assert config.strands == 4
        assert config.workers == RunConfig().workers

    def test_window_ends(self):
        config = RunConfig(window=(-10, 10)).merged({"window_min": -3})
        assert config.window == (-3, 10)
        assert config.merged({"window_max": 4}).window == (-3, 4)

    def test_window_flag_wins(self):
        config = RunConfig().merged({"window_min": -3, "window": (-1, 1)})
        assert config.window == (-1, 1)

    @pytest.mark.parametrize(
        "kwargs, message",
        [
            ({"window": (3, -3)}, "차수 창"),
            ({"lattice_bound": 0}, "격자 범위"),
            ({"workers": 0}, "작업자 수"),
            ({"max_len": -1}, "단어 길이"),
            ({"strands": 0}, "가닥 수"),
        ],
    )
    def test_validation(self, kwargs, message):
        with pytest.raises(ValueError, match=message):
            RunConfig(**kwargs)

    def test_merged_validates(self):
        with pytest.raises(ValueError, match="차수 창"):
            RunConfig(window=(-2, 2)).merged({"window_min": 5})

    def test_to_dict_has_only_result_affecting_fields(self):
        data = RunConfig(workers=8, progress=True).to_dict()
        assert data == {"window": [-10, 10], "lattice_bound": 2, "max_len": 5, "strands": 3}
