"""
URL configuration for axislab.

The JSON API mirrors the management commands: /api/words/, /api/trees/,
/api/overlaps/, /api/decomposition/ and /api/hyperbolic/.
"""
from django.contrib import admin
from django.urls import path, include

urlpatterns = [
    path('admin/', admin.site.urls),
    path('api/words/', include('words.urls')),
    path('api/trees/', include('trees.urls')),
    path('api/overlaps/', include('overlaps.urls')),
    path('api/decomposition/', include('decomposition.urls')),
    path('api/hyperbolic/', include('hyperbolic.urls')),
]
