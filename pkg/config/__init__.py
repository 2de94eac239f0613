from config.settings import CheckConfig, Settings
