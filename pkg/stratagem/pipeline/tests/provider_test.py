"""# stratagem.pipeline.tests.provider_test

Provider client test suite: mock replay, HTTP transport and retries, configuration loading.
"""

from json               import dumps
from pathlib            import Path
from typing             import List
from unittest.mock      import MagicMock, Mock

from pytest             import fixture, mark, raises
from requests           import ConnectionError as RequestsConnectionError

from stratagem.pipeline import *

# Chat completion body.
def _completion_(content: str, status: int = 200) -> Mock:
    """# Mock HTTP Response Carrying One Completion."""
    return Mock(status_code = status, text = "", reason = "OK", json = Mock(return_value = {"choices": [{"message": {"content": content}}]}))

def _failure_(status: int, body: str = "busy") -> Mock:
    """# Mock Non-2xx HTTP Response."""
    return Mock(status_code = status, text = body, reason = body, json = Mock(side_effect = ValueError("no json")))

@fixture
def config(monkeypatch) -> ProviderConfig:
    """# HTTP Provider Configuration With the Key Set."""
    monkeypatch.setenv("STRATAGEM_TEST_KEY", "secret")
    return ProviderConfig(base_url = "https://llm.example/v1/", model = "test-model", api_key_env = "STRATAGEM_TEST_KEY", backoff = 0.0)

# MOCK REPLAY ======================================================================================

def test_mock_repeats_single_response(tmp_path: Path) -> None:
    """# Test N Requests Against One Canned Body."""
    # One canned body.
    (tmp_path / "00.txt").write_text("Name: x\n", encoding = "utf-8")

    # Request three.
    responses:  List[ProviderResponse] =    request_candidates("prompt", MockProvider(tmp_path), 3)

    assert [r.ordinal for r in responses] == [0, 1, 2],         f"Expected ordinals 0-2, got {[r.ordinal for r in responses]}"
    assert all(r.text == "Name: x\n" for r in responses),        "Every response should replay the canned body"
    assert not any(r.failed for r in responses),                "No response should fail"

def test_mock_replays_fixture_directory(responses_path: Path) -> None:
    """# Test Twenty Responses With Two Transport Failures."""
    # Request twenty.
    responses:  List[ProviderResponse] =    request_candidates("prompt", MockProvider(responses_path), 20)

    assert len(responses) == 20,                                    f"Expected 20 responses, got {len(responses)}"
    assert [r.ordinal for r in responses if r.failed] == [1, 14],   "Ordinals 1 and 14 carry canned failures"
    assert "HTTP 503" in responses[1].error,                        f"Unexpected error: {responses[1].error}"

def test_retry_budget_zero_fails_once(tmp_path: Path) -> None:
    """# Test One Failure Among Twenty Without Retries."""
    # Nineteen bodies and one failure.
    for ordinal in range(20):
        if ordinal == 7:    (tmp_path / "07.error").write_text("unavailable", encoding = "utf-8")
        else:               (tmp_path / f"{ordinal:02d}.txt").write_text(f"body {ordinal}", encoding = "utf-8")

    # Request twenty.
    responses:  List[ProviderResponse] =    request_candidates("prompt", MockProvider(tmp_path, retries = 0), 20)

    assert sum(r.failed for r in responses) == 1,   "Exactly one response should fail"
    assert responses[7].attempts == 1,              f"Failed request should be tried once, got {responses[7].attempts}"
    assert responses[8].text == "body 8",           f"Unexpected body: {responses[8].text}"

def test_mock_cycles_past_last_file(responses_path: Path) -> None:
    """# Test Ordinals Beyond the Files Wrap Around."""
    # Request more than available.
    responses:  List[ProviderResponse] =    request_candidates("prompt", MockProvider(responses_path), 22)

    assert responses[20].text == responses[0].text, "Ordinal 20 should replay ordinal 0"
    assert responses[21].failed,                    "Ordinal 21 should replay the failure of ordinal 1"

def test_mock_rejects_empty_directory(tmp_path: Path) -> None:
    """# Test Empty Replay Directory."""
    with raises(ProviderConfigError): MockProvider(tmp_path)

def test_parse_provider_mock(responses_path: Path) -> None:
    """# Test `mock:<dir>` Specification."""
    # Parse specification.
    provider:   Provider =  parse_provider(f"mock:{responses_path}")

    assert isinstance(provider, MockProvider),  f"Expected mock provider, got {type(provider).__name__}"
    assert provider.config.model == "mock",     f"Unexpected model: {provider.config.model}"

# HTTP TRANSPORT ===================================================================================

def test_http_request_payload(config: ProviderConfig) -> None:
    """# Test Endpoint, Headers and Body of a Request."""
    # Mock session.
    session:    MagicMock =         MagicMock()
    session.post.return_value =     _completion_("Name: h\n")

    # Request.
    response:   ProviderResponse =  HttpProvider(config, session = session).request("the prompt", 4)

    # Inspect call.
    url, kwargs =                   session.post.call_args.args[0], session.post.call_args.kwargs

    assert response.text == "Name: h\n" and response.ordinal == 4,  f"Unexpected response: {response}"
    assert url == "https://llm.example/v1/chat/completions",        f"Unexpected endpoint: {url}"
    assert kwargs["headers"]["Authorization"] == "Bearer secret",   "Key should come from the environment"
    assert kwargs["json"]["max_tokens"] == 16384,                   f"Unexpected max_tokens: {kwargs['json']}"
    assert kwargs["json"]["messages"][0]["content"] == "the prompt", "Prompt should be the only message"
    assert "temperature" not in kwargs["json"],                     "Sampling settings should be left to the provider"

def test_http_retries_transient_failure(config: ProviderConfig) -> None:
    """# Test Non-2xx Then Success."""
    # Mock session: one failure, then a completion.
    session:    MagicMock =         MagicMock()
    session.post.side_effect =      [_failure_(503), _completion_("ok")]

    # Request.
    response:   ProviderResponse =  HttpProvider(config, session = session).request("p", 0)

    assert not response.failed and response.text == "ok",  f"Expected success, got {response}"
    assert response.attempts == 2,                          f"Expected two attempts, got {response.attempts}"

@mark.parametrize("outcome", [_failure_(429, "rate limited"), RequestsConnectionError("refused")])
def test_http_exhausted_retries_fail(config: ProviderConfig, outcome: object) -> None:
    """# Test Failure After the Retry Budget."""
    # Mock session failing every time.
    session:    MagicMock =         MagicMock()
    session.post.side_effect =      [outcome] * 3

    # Request.
    response:   ProviderResponse =  HttpProvider(config, session = session).request("p", 0)

    assert response.failed and response.text is None,   f"Expected failure, got {response}"
    assert response.attempts == 3,                      f"Expected three attempts, got {response.attempts}"
    assert session.post.call_count == 3,                f"Expected three posts, got {session.post.call_count}"

def test_http_malformed_envelope_fails(config: ProviderConfig) -> None:
    """# Test Envelope Without Choices."""
    # Mock session answering with an unexpected document.
    session:    MagicMock =         MagicMock()
    session.post.return_value =     Mock(status_code = 200, text = "{}", reason = "OK", json = Mock(return_value = {}))

    # Request.
    response:   ProviderResponse =  HttpProvider(config, session = session).request("p", 0)

    assert response.failed and "malformed" in response.error,   f"Expected malformed envelope failure, got {response}"

def test_http_requires_key(monkeypatch) -> None:
    """# Test Missing API Key Variable."""
    monkeypatch.delenv("STRATAGEM_MISSING_KEY", raising = False)

    with raises(ProviderConfigError):
        HttpProvider(ProviderConfig(base_url = "https://llm.example", model = "m", api_key_env = "STRATAGEM_MISSING_KEY"))

# CONFIGURATION ====================================================================================

def test_load_provider_config(tmp_path: Path) -> None:
    """# Test Configuration File Round Trip."""
    # Write configuration.
    path:   Path =  tmp_path / "provider.json"
    path.write_text(dumps({"base_url": "https://x", "model": "m", "api_key_env": "K", "in_flight": 4}), encoding = "utf-8")

    # Load.
    config: ProviderConfig =    load_provider_config(path)

    assert config.in_flight == 4 and config.max_tokens == 16384,    f"Unexpected configuration: {config}"

@mark.parametrize(
    "document",
    [
        {"base_url": "https://x", "model": "m"},
        {"base_url": "https://x", "model": "m", "api_key_env": "K", "temperature": 0.2},
        {"base_url": "https://x", "model": "m", "api_key_env": "K", "retries": 5},
    ]
)
def test_load_provider_config_rejects(tmp_path: Path, document: dict) -> None:
    """# Test Missing, Unknown and Out-of-Range Keys."""
    # Write configuration.
    path:   Path =  tmp_path / "provider.json"
    path.write_text(dumps(document), encoding = "utf-8")

    with raises(ProviderConfigError): load_provider_config(path)
