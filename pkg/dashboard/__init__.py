from dashboard.summary import RunDashboard
